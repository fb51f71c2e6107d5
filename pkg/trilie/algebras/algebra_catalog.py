import re
from importlib import resources

from ..exceptions import AlgebraFormatError
from ..linalg.linalg_models import unit_vector
from .algebra_files import AlgebraInput, read_document, validated_input
from .algebra_models import AlgebraDocument
from .algebra_ops import abelian

# catalog name -> data file under algebras/catalog
CATALOG_FILES = {
    "abelian(1)": "abelian1.yaml",
    "abelian(2)": "abelian2.yaml",
    "abelian(3)": "abelian3.yaml",
    "abelian(4)": "abelian4.yaml",
    "A3": "a3.yaml",
    "B4": "b4.yaml",
    "A3+A3": "a3_a3.yaml",
    "A3+abelian(1)": "a3_abelian1.yaml",
}

_ABELIAN = re.compile(r"abelian\((\d+)\)")


def catalog_names() -> list[str]:
    return list(CATALOG_FILES)


def catalog_document(name: str) -> AlgebraDocument:
    """The data document of a built-in algebra; abelian(N) is accepted for any N."""
    if name in CATALOG_FILES:
        text = resources.files(__package__).joinpath("catalog").joinpath(CATALOG_FILES[name]).read_text(encoding="utf-8")
        return read_document(text, f"catalog:{name}")
    match = _ABELIAN.fullmatch(name)
    if match:
        n = int(match.group(1))
        torus = [list(unit_vector(n, i)) for i in range(n)]
        return AlgebraDocument.from_algebra(abelian(n), torus=torus)
    raise AlgebraFormatError(f"unknown catalog algebra '{name}'; known: {', '.join(CATALOG_FILES)}")


def load_catalog(name: str) -> AlgebraInput:
    return validated_input(catalog_document(name), f"catalog:{name}")
