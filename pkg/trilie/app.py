import logging
import os

import typer
from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from .dependencies.config import load_settings

description = """
trilie computes the derivation-type spaces of a finite-dimensional 3-Lie
algebra over the rationals and checks the structure results relating them.

Algebras are read from YAML or JSON files or taken from the built-in
catalog with catalog:NAME.

# Commands

* **check**: validate a structure-constant file
* **catalog**: list or print the built-in algebras
* **spaces**: Der, ad, ZDer, centroid, quasicentroid, QDer and GDer with bases
* **extend**: the tensor extension and its derivations
* **kernel**: the Ker(μ) criterion and the coboundary checks
* **weights**: weight decompositions relative to a torus
* **verify**: every check that applies to the input
"""

load_dotenv(os.path.join(os.path.dirname(__file__), '.env'))
settings = load_settings()

logging.basicConfig(
    level=settings.log_level,
    format="%(message)s",
    handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
)

app = typer.Typer(help=description, no_args_is_help=True, add_completion=False)


@app.callback()
def main(verbose: bool = typer.Option(False, "--verbose", "-v", help="Log every computed space to stderr.")):
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)


from .algebras import algebra_commands  # noqa: E402,F401
from .maps import map_commands  # noqa: E402,F401
from .extension import extension_commands  # noqa: E402,F401
from .cohomology import cohomology_commands  # noqa: E402,F401
from .weights import weight_commands  # noqa: E402,F401
from .reports import verify_commands  # noqa: E402,F401
