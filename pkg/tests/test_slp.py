"""Straight-line programs: cost accounting, evaluation, symbolic expansion."""

from fractions import Fraction

import pytest

from openquadrant.catalog import build_F, build_G, build_H, build_f
from openquadrant.polynomials import Poly
from openquadrant.rng import SplitMix64
from openquadrant.slp import (
    SlpProgram,
    chain,
    factored_programs,
    nonscalar_count,
    parse_slp,
    serialize_slp,
    slp_eval,
    slp_expand,
)
from openquadrant.textform import serialize


class TestCounting:
    def test_stage_split_and_chain_total(self):
        progs = factored_programs()
        assert nonscalar_count(progs["F"]) == 4
        assert nonscalar_count(progs["G"]) == 4
        assert nonscalar_count(progs["H"]) == 3
        assert nonscalar_count(progs["f"]) == 11

    def test_chain_total_is_sum_of_stages(self):
        progs = factored_programs()
        assert nonscalar_count(progs["f"]) == sum(
            nonscalar_count(progs[s]) for s in ("F", "G", "H")
        )

    def test_squaring_counts_once(self):
        prog = SlpProgram((("input", 0), ("mul", 0, 0)), (1,))
        assert nonscalar_count(prog) == 1

    def test_scalar_chains_are_free(self):
        # 3x + 2 via smul/const/add
        prog = SlpProgram(
            (("input", 0), ("smul", Fraction(3), 0), ("const", Fraction(2)), ("add", 1, 2)),
            (3,),
        )
        assert nonscalar_count(prog) == 0

    def test_mul_with_constant_derived_operand_is_free(self):
        # (2*3) * x: the product of two constants stays constant-derived
        prog = SlpProgram(
            (
                ("input", 0),
                ("const", Fraction(2)),
                ("const", Fraction(3)),
                ("mul", 1, 2),
                ("mul", 3, 0),
            ),
            (4,),
        )
        assert nonscalar_count(prog) == 0

    def test_count_invariant_under_topological_reordering(self):
        prog = factored_programs()["G"]
        reordered = _topological_shuffle(prog, seed=13)
        assert reordered.instructions != prog.instructions
        assert nonscalar_count(reordered) == nonscalar_count(prog)
        assert slp_expand(reordered) == slp_expand(prog)


def _topological_shuffle(prog: SlpProgram, seed: int) -> SlpProgram:
    """Re-emit instructions in a different but still topological order."""
    rng = SplitMix64(seed)
    deps = []
    for ins in prog.instructions:
        if ins[0] in ("add", "sub", "mul"):
            deps.append({ins[1], ins[2]})
        elif ins[0] == "smul":
            deps.append({ins[2]})
        else:
            deps.append(set())
    remaining = set(range(len(prog.instructions)))
    placed: dict[int, int] = {}
    new_instructions = []
    while remaining:
        ready = sorted(i for i in remaining if deps[i] <= placed.keys())
        pick = ready[rng.next_below(len(ready))]
        ins = prog.instructions[pick]
        if ins[0] in ("add", "sub", "mul"):
            ins = (ins[0], placed[ins[1]], placed[ins[2]])
        elif ins[0] == "smul":
            ins = (ins[0], ins[1], placed[ins[2]])
        placed[pick] = len(new_instructions)
        new_instructions.append(ins)
        remaining.remove(pick)
    return SlpProgram(tuple(new_instructions), tuple(placed[o] for o in prog.outputs))


class TestEvaluation:
    def test_stage_values_match_the_maps(self):
        progs = factored_programs()
        assert slp_eval(progs["F"], (0, 0)) == (1, 1)
        assert slp_eval(progs["G"], (1, 1)) == (1, 1)
        assert slp_eval(progs["H"], (1, 1)) == (Fraction(3, 2), 1)
        assert slp_eval(progs["f"], (1, 1)) == (Fraction(3, 2), 1)

    def test_eval_matches_expansion_on_random_rationals(self):
        progs = factored_programs()
        rng = SplitMix64(21)
        expanded = {name: slp_expand(progs[name]) for name in progs}
        for _ in range(100):
            p = (
                rng.next_positive_rational(40) - 2,
                rng.next_positive_rational(40) - 2,
            )
            for name, prog in progs.items():
                assert slp_eval(prog, p) == expanded[name].evaluate(p)

    def test_short_point_rejected(self):
        with pytest.raises(ValueError):
            slp_eval(factored_programs()["F"], (1,))


class TestExpansion:
    def test_stage_expansions_equal_catalog_maps(self):
        progs = factored_programs()
        assert slp_expand(progs["F"]) == build_F()
        assert slp_expand(progs["G"]) == build_G()
        assert slp_expand(progs["H"]) == build_H()

    def test_chained_expansion_matches_f_byte_for_byte(self):
        chained = factored_programs()["f"]
        assert serialize(slp_expand(chained)) == serialize(build_f())

    def test_expand_single_square(self):
        prog = SlpProgram((("input", 0), ("mul", 0, 0)), (1,))
        assert slp_expand(prog).components[0] == Poly.variable(1, 0) ** 2


class TestProgramStructure:
    def test_forward_reference_rejected(self):
        with pytest.raises(ValueError):
            SlpProgram((("add", 0, 1), ("input", 0)), (0,))

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            SlpProgram((("neg", 0),), (0,))

    def test_output_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            SlpProgram((("input", 0),), (3,))

    def test_chain_input_arity_checked(self):
        one_output = SlpProgram((("input", 0),), (0,))
        two_inputs = factored_programs()["G"]
        with pytest.raises(ValueError):
            chain(one_output, two_inputs)


class TestTextFormat:
    def test_round_trip_all_programs(self):
        for prog in factored_programs().values():
            text = serialize_slp(prog)
            again = parse_slp(text)
            assert again == prog
            assert serialize_slp(again) == text

    def test_parse_rejects_bad_numbering(self):
        with pytest.raises(ValueError, match="numbered"):
            parse_slp("%1 = input 0\nout %1\n")

    def test_parse_rejects_missing_out(self):
        with pytest.raises(ValueError, match="out"):
            parse_slp("%0 = input 0\n")

    def test_parse_rejects_malformed_reference(self):
        with pytest.raises(ValueError, match="reference"):
            parse_slp("%0 = input 0\n%1 = add %0 x\nout %1\n")
