import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heegaard_cert.errors import InputError, ResourceLimitError
from heegaard_cert.heegaard import (
    HeegaardDiagram,
    IntersectionPoint,
    StrongReport,
    algebraic_matrix,
    count_matrix,
    euler_characteristic,
    flip_alpha_orientation,
    gen_lens,
    generators,
    h1_order,
    is_strong,
    presentation_of,
    rotate_beta,
)
from heegaard_cert.intmat import bareiss_det
from heegaard_cert.presentation import Presentation, epsilon_matrix, word
from heegaard_cert.signs import Sign
from oracles import leibniz_det, permanent, random_diagrams

GENUS2 = HeegaardDiagram.from_lists([[(1, 1), (2, 1)], [(1, 1), (2, -1)]])
MIXED = HeegaardDiagram.from_lists([[(1, 1), (1, -1), (1, 1)]])
LENS3 = gen_lens(3)


def test_presentation_examples():
    assert presentation_of(LENS3) == Presentation(1, (word((0, 1), (0, 1), (0, 1)),))
    assert presentation_of(GENUS2) == Presentation(2, (word((0, 1), (1, 1)), word((0, 1), (1, -1))))
    assert presentation_of(HeegaardDiagram.from_lists([[]])) == Presentation(1, ((),))


def test_matrices_examples():
    assert count_matrix(LENS3) == [[3]] and algebraic_matrix(LENS3) == [[3]]
    assert count_matrix(GENUS2) == [[1, 1], [1, 1]]
    assert algebraic_matrix(GENUS2) == [[1, 1], [1, -1]]
    assert count_matrix(MIXED) == [[3]] and algebraic_matrix(MIXED) == [[1]]


def test_h1_examples():
    assert h1_order(LENS3) == 3
    assert h1_order(GENUS2) == 2
    assert h1_order(HeegaardDiagram.from_lists([[(1, 1)], [(2, 1), (2, -1)]])) is None


def test_generators_examples():
    gens = generators(LENS3)
    assert len(gens) == 3 and all(g.grading == 1 for g in gens)
    gens = generators(GENUS2)
    assert [(g.sigma, g.grading) for g in gens] == [((0, 1), -1), ((1, 0), -1)]
    assert [g.grading for g in generators(MIXED)] == [1, -1, 1]
    for g in generators(GENUS2):
        pts = g.points(GENUS2)
        assert [p.alpha for p in pts] == [0, 1]


def test_generator_cap():
    with pytest.raises(ResourceLimitError):
        generators(gen_lens(5), cap=4)
    assert len(generators(gen_lens(5), cap=5)) == 5


def test_euler_examples():
    assert euler_characteristic(LENS3) == 3
    assert euler_characteristic(GENUS2) == -2
    assert euler_characteristic(MIXED) == 1


def test_strong_examples():
    r = is_strong(LENS3)
    assert r.is_strong and r.h1_order == 3 and r.generator_count == 3
    r = is_strong(MIXED)
    assert not r.is_strong and r.generator_count == 3 and r.h1_order == 1 and not r.gradings_uniform
    r = is_strong(GENUS2)
    assert r.is_strong and r.h1_order == 2
    r = is_strong(HeegaardDiagram.from_lists([[(1, 1)], [(2, 1), (2, -1)]]))
    assert not r.is_strong and r.h1_order is None
    assert StrongReport.from_dict(r.to_dict()) == r


def test_gen_lens():
    s3 = gen_lens(1)
    assert s3.beta_words == ((IntersectionPoint(0, 1),),)
    r = is_strong(gen_lens(5))
    assert r.is_strong and r.h1_order == 5
    assert presentation_of(gen_lens(2)) == Presentation(1, (word((0, 1), (0, 1)),))
    assert gen_lens(4, 1).label == "L(4,1)"
    assert gen_lens(4, 1) == gen_lens(4, 3)
    for bad in (0, -2, True, 2.0):
        with pytest.raises(InputError):
            gen_lens(bad)


def test_flip_examples():
    f = flip_alpha_orientation(LENS3, 0)
    assert all(p.sign == -1 for p in f.beta_words[0])
    assert all(g.grading == -1 for g in generators(f))
    assert is_strong(f).is_strong
    assert flip_alpha_orientation(f, 0) == LENS3
    assert euler_characteristic(flip_alpha_orientation(GENUS2, 1)) == 2
    with pytest.raises(InputError):
        flip_alpha_orientation(LENS3, 1)


def test_diagram_validation():
    with pytest.raises(InputError):
        HeegaardDiagram.from_lists([[(2, 1)]])
    with pytest.raises(InputError):
        HeegaardDiagram.from_lists([[(1, 0)]])
    with pytest.raises(InputError):
        HeegaardDiagram(2, (((0, 1),),))
    with pytest.raises(InputError):
        HeegaardDiagram.from_lists([])


def test_file_format():
    text = json.dumps({"genus": 1, "beta": [[[1, 1], [1, 1], [1, 1]]]})
    assert HeegaardDiagram.loads(text) == gen_lens(3)
    assert HeegaardDiagram.loads(gen_lens(3).dumps()) == gen_lens(3)
    for bad in ["{", "[]", '{"genus": 1}', '{"genus": 1, "beta": [[[1]]]}', '{"genus": "1", "beta": [[]]}',
                '{"genus": 2, "beta": [[]]}', '{"genus": 1, "beta": [[[1, true]]]}']:
        with pytest.raises(InputError):
            HeegaardDiagram.loads(bad)


def test_bareiss_against_leibniz():
    import random

    rng = random.Random(2)
    for _ in range(500):
        n = rng.randint(1, 5)
        a = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        assert bareiss_det(a) == leibniz_det(a)
    assert bareiss_det([]) == 1
    assert bareiss_det([[0, 1], [1, 0]]) == -1
    with pytest.raises(ValueError):
        bareiss_det([[1, 2]])


DIAGRAMS = random_diagrams(seed=7, count=400)


@pytest.mark.parametrize("h", DIAGRAMS[:150])
def test_euler_equals_det_and_count_equals_permanent(h):
    gens = generators(h)
    assert len(gens) == permanent(count_matrix(h))
    assert euler_characteristic(h) == leibniz_det(algebraic_matrix(h))
    for g in gens:
        for i, p in enumerate(g.points(h)):
            assert p.alpha == i


def test_strongness_invariant_under_flip_and_rotation():
    import random

    rng = random.Random(13)
    for h in DIAGRAMS:
        r = is_strong(h)
        i = rng.randrange(h.genus)
        j = rng.randrange(h.genus)
        for other in (flip_alpha_orientation(h, i), rotate_beta(h, j, rng.randint(0, 6))):
            r2 = is_strong(other)
            assert r2.is_strong == r.is_strong
            assert r2.gradings_uniform == r.gradings_uniform
            assert r2.h1_order == r.h1_order
        assert epsilon_matrix(presentation_of(rotate_beta(h, j, 2))) == epsilon_matrix(presentation_of(h))


def test_epsilon_zero_and_star_pattern():
    for h in DIAGRAMS:
        e = epsilon_matrix(presentation_of(h))
        c = count_matrix(h)
        for i in range(h.genus):
            for j in range(h.genus):
                signs = {p.sign for p in h.beta_words[j] if p.alpha == i}
                assert (e[i, j] is Sign.ZERO) == (c[i][j] == 0)
                assert (e[i, j] is Sign.STAR) == (signs == {1, -1})


points = st.builds(IntersectionPoint, st.integers(0, 2), st.sampled_from((1, -1)))


@settings(max_examples=200)
@given(st.integers(1, 3).flatmap(
    lambda g: st.lists(
        st.lists(st.builds(IntersectionPoint, st.integers(0, g - 1), st.sampled_from((1, -1))), max_size=4),
        min_size=g, max_size=g,
    ).map(lambda ws: HeegaardDiagram(g, tuple(map(tuple, ws))))
))
def test_strong_iff_uniform_and_det_bound(h):
    r = is_strong(h)
    d = leibniz_det(algebraic_matrix(h))
    assert abs(d) <= r.generator_count
    if r.generator_count:
        assert (abs(d) == r.generator_count) == r.gradings_uniform
    assert r.is_strong == (r.h1_order is not None and r.generator_count == r.h1_order and r.gradings_uniform)
