"""Segre-Veronese specs, embeddings and tangent frames."""

import random

import pytest

from grasec import field, varieties
from grasec.varieties import SegreVeroneseSpec, prepend_projective_factor

P = field.DEFAULT_PRIME


class TestSpec:
    def test_ambient_dims(self):
        assert SegreVeroneseSpec.parse("1,1,1").ambient_dim == 7
        assert SegreVeroneseSpec.parse("3,3,3").ambient_dim == 63
        assert SegreVeroneseSpec.parse("2:2").ambient_dim == 5

    def test_dim_and_arity(self):
        spec = SegreVeroneseSpec.parse("2:2,1")
        assert spec.dim == 3
        assert spec.arity == 5
        assert spec.factor_offsets() == [0, 3]

    def test_parse_str_roundtrip(self):
        for text in ("1,1,1,1", "2:2", "3:1,3:1", "6:1,2:2"):
            spec = SegreVeroneseSpec.parse(text)
            assert SegreVeroneseSpec.parse(str(spec)) == spec

    def test_invalid_specs_rejected(self):
        with pytest.raises(ValueError):
            SegreVeroneseSpec.parse("")
        with pytest.raises(ValueError):
            SegreVeroneseSpec(((0, 1),))
        with pytest.raises(ValueError):
            SegreVeroneseSpec(((1, 0),))

    def test_monomial_count_matches_ambient(self):
        for text in ("1,1", "2:2", "1:3", "2,2", "3:2"):
            spec = SegreVeroneseSpec.parse(text)
            assert len(varieties.monomials(spec)) == spec.ambient_dim + 1


class TestEmbed:
    def test_segre_of_two_lines(self):
        spec = SegreVeroneseSpec.parse("1,1")
        assert varieties.embed(spec, ((1, 2), (1, 3)), P) == [1, 3, 2, 6]

    def test_twisted_cubic(self):
        spec = SegreVeroneseSpec.parse("1:3")
        assert varieties.embed(spec, ((1, 2),), P) == [1, 2, 4, 8]

    def test_coordinate_point(self):
        spec = SegreVeroneseSpec.parse("1,2")
        assert varieties.embed(spec, ((1, 0), (0, 0, 1)), P) == [0, 0, 1, 0, 0, 0]

    def test_zero_factor_rejected(self):
        spec = SegreVeroneseSpec.parse("1,1")
        with pytest.raises(ValueError):
            varieties.embed(spec, ((0, 0), (1, 1)), P)

    def test_multihomogeneity(self):
        # scaling factor i by c scales the embedding by c**d_i
        rng = random.Random(2)
        spec = SegreVeroneseSpec.parse("1:3,2:2")
        for _ in range(10):
            point = varieties.random_parameter_point(spec, rng, P)
            base = varieties.embed(spec, point, P)
            c = rng.randrange(2, P)
            scaled_point = (tuple(v * c % P for v in point[0]), point[1])
            scaled = varieties.embed(spec, scaled_point, P)
            factor = pow(c, 3, P)
            assert scaled == [v * factor % P for v in base]


class TestTangentFrames:
    def test_bilinear_coordinate_point(self):
        spec = SegreVeroneseSpec.parse("1,1")
        frame = varieties.tangent_frame(spec, ((1, 0), (1, 0)), P)
        assert field.matrix_rank(frame, P) == 3
        # the frame spans exactly the coordinates x00, x01, x10
        basis = field.row_space_basis(frame, P)
        assert basis.tolist() == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]

    def test_conic_tangent(self):
        spec = SegreVeroneseSpec.parse("1:2")
        frame = varieties.tangent_frame(spec, ((1, 0),), P)
        basis = field.row_space_basis(frame, P)
        assert basis.tolist() == [[1, 0, 0], [0, 1, 0]]

    def test_random_frame_rank(self):
        spec = SegreVeroneseSpec.parse("2,2")
        rng = random.Random(11)
        point = varieties.random_parameter_point(spec, rng, P)
        frame = varieties.tangent_frame(spec, point, P)
        assert field.matrix_rank(frame, P) == 5

    def test_frame_contains_embedding(self):
        spec = SegreVeroneseSpec.parse("1:3")
        rng = random.Random(4)
        point = varieties.random_parameter_point(spec, rng, P)
        frame = varieties.tangent_frame(spec, point, P)
        assert field.subspace_contains(frame, [varieties.embed(spec, point, P)], P)


class TestPrepend:
    def test_pencil_spec(self):
        spec = SegreVeroneseSpec.parse("1,1,1,1")
        seg = prepend_projective_factor(spec, 1)
        assert seg == SegreVeroneseSpec.parse("1,1,1,1,1")
        assert seg.ambient_dim == 31

    def test_matrix_system_spec(self):
        seg = prepend_projective_factor(SegreVeroneseSpec.parse("3,3"), 3)
        assert seg.ambient_dim == 63

    def test_ambient_identity(self):
        for text, k in (("2:2", 2), ("1,2", 3), ("1:3", 1)):
            spec = SegreVeroneseSpec.parse(text)
            seg = prepend_projective_factor(spec, k)
            assert seg.ambient_dim + 1 == (k + 1) * (spec.ambient_dim + 1)

    def test_k_zero_rejected(self):
        with pytest.raises(ValueError):
            prepend_projective_factor(SegreVeroneseSpec.parse("1,1"), 0)


class TestEnumeration:
    def test_projective_line_point_count(self):
        spec = SegreVeroneseSpec.parse("1:1")
        points = list(varieties.enumerate_parameter_points(spec, 5))
        assert len(points) == 6  # |P^1(F_5)| = 5 + 1

    def test_product_point_count(self):
        spec = SegreVeroneseSpec.parse("1,1")
        assert len(list(varieties.enumerate_parameter_points(spec, 5))) == 36

    def test_representatives_are_normalized(self):
        spec = SegreVeroneseSpec.parse("2:1")
        for point in varieties.enumerate_parameter_points(spec, 3):
            coords = point[0]
            pivot = next(v for v in coords if v)
            assert pivot == 1
