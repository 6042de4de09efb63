import itertools

import pytest

from hcramsey.graphs import EdgeColoring, InputFormatError
from hcramsey.satbridge import (
    assignment_satisfies,
    cnf_satisfiable_by_enumeration,
    coloring_to_literals,
    decode_model,
    emit_cnf,
    parse_dimacs_provenance,
    parse_model_text,
    to_dimacs,
    verify_cnf_equivalence,
)
from hcramsey.search import AVOIDING, arrow_check, exists_avoiding_coloring

from conftest import two_pentagons_coloring


class TestEmitCnf:
    def test_variables_are_dense(self):
        inst = emit_cnf(4, 3, 2, 2)
        seen = {abs(l) for clause in inst.clauses for l in clause}
        assert seen == set(range(1, inst.num_vars + 1))

    def test_n5_satisfiable_by_known_avoider(self):
        inst = emit_cnf(5, 3, 3, 2)
        assert assignment_satisfies(inst, two_pentagons_coloring())

    def test_n6_unsatisfiable(self):
        assert cnf_satisfiable_by_enumeration(emit_cnf(6, 3, 3, 2)) is False

    def test_single_coloring_unsatisfiable(self):
        assert cnf_satisfiable_by_enumeration(emit_cnf(3, 3, 1, 1)) is False

    def test_byte_identical_output(self):
        assert to_dimacs(emit_cnf(5, 3, 2, 2)) == to_dimacs(emit_cnf(5, 3, 2, 2))

    def test_size_limit(self):
        with pytest.raises(ValueError, match="size limit"):
            emit_cnf(12, 7, 2, 4)


class TestDecodeModel:
    def test_round_trip_from_search(self):
        inst = emit_cnf(5, 3, 3, 2)
        out = exists_avoiding_coloring(5, 3, 3, 2)
        decoded = decode_model(inst, coloring_to_literals(inst, out.coloring))
        assert decoded == out.coloring
        assert arrow_check(decoded, 3, 3) is None

    def test_bad_solver_model_is_flagged_downstream(self):
        # constant color 0 on K3 decodes fine, but the native check
        # catches that it is not avoiding
        inst = emit_cnf(3, 3, 1, 1)
        c = EdgeColoring.constant(3, 1, 0)
        decoded = decode_model(inst, coloring_to_literals(inst, c))
        assert arrow_check(decoded, 1, 3) is not None

    def test_two_colors_on_one_edge(self):
        inst = emit_cnf(3, 3, 1, 2)
        lits = [inst.var(0, 0), inst.var(0, 1)]
        lits += [
            -v for v in range(1, inst.num_vars + 1) if v not in {abs(l) for l in lits}
        ]
        with pytest.raises(ValueError, match="malformed model"):
            decode_model(inst, lits)

    def test_partial_assignment_rejected(self):
        inst = emit_cnf(3, 3, 1, 2)
        with pytest.raises(ValueError, match="not total"):
            decode_model(inst, [1, 2])


class TestModelText:
    def test_vline_format(self):
        assert parse_model_text("s SATISFIABLE\nv 1 -2 3\nv -4 0\n") == [1, -2, 3, -4]

    def test_bad_token(self):
        with pytest.raises(InputFormatError):
            parse_model_text("v one 0")


class TestProvenance:
    def test_round_trip(self):
        inst = emit_cnf(5, 3, 2, 2)
        params = parse_dimacs_provenance(to_dimacs(inst))
        assert params == {"n": 5, "m": 3, "kappa": 2, "k": 2}

    def test_missing(self):
        with pytest.raises(InputFormatError):
            parse_dimacs_provenance("p cnf 1 0\n")


class TestVerifyEquivalence:
    def test_degenerate_point(self):
        (report,) = verify_cnf_equivalence([(2, 2, 1, 1)])
        assert report["match"] and not report["cnf_satisfiable"]

    def test_small_grid(self):
        grid = [(4, 3, kappa, k) for kappa in (1, 2, 3) for k in (1, 2)]
        assert all(r["match"] for r in verify_cnf_equivalence(grid))

    def test_satisfiable_point(self):
        (report,) = verify_cnf_equivalence([(5, 3, 3, 2)])
        assert report["match"] and report["cnf_satisfiable"]
