import pytest

from cometric.generators import SchemeSpec, generate
from cometric.qpoly import find_qpoly_orderings
from cometric.scheme import krein_parameters, validate_scheme

# the schemes every cross-route test runs over
CORPUS_SPECS = (
    [("complete", {"n": n}) for n in (3, 4, 5, 10)]
    + [("cycle", {"n": n}) for n in range(5, 13)]
    + [("hamming", {"d": d, "q": 2}) for d in range(3, 7)]
    + [("johnson", {"v": 5, "k": 2})]
    + [("petersen", {})]
    + [("cocktail_party", {"n": n}) for n in (3, 4, 5)]
    + [("icosahedron", {})]
)


def spec_label(fam, params):
    return fam + (str(tuple(params.values())) if params else "")


@pytest.fixture(scope="session")
def corpus():
    """[(label, SchemeCore, KreinTensor, orderings)] for the full corpus."""
    out = []
    for fam, params in CORPUS_SPECS:
        sc = validate_scheme(generate(SchemeSpec(fam, params)))
        kt = krein_parameters(sc)
        out.append((spec_label(fam, params), sc, kt, find_qpoly_orderings(kt, sc)))
    return out


@pytest.fixture(scope="session")
def scheme_of(corpus):
    index = {label: (sc, kt, ords) for label, sc, kt, ords in corpus}

    def get(label):
        return index[label]

    return get
