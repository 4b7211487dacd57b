"""Straight-line programs for the factored evaluation scheme of the maps.

An SLP is a branch-free instruction list computing polynomials; it is the
linear form of an arithmetic circuit.  Instructions are plain tuples:

    ("input", k)        -- the k-th input variable
    ("const", q)        -- a rational constant
    ("add", i, j)       -- value[i] + value[j]
    ("sub", i, j)       -- value[i] - value[j]
    ("mul", i, j)       -- value[i] * value[j]
    ("smul", q, i)      -- q * value[i], the only multiply-by-constant form

Operands always reference earlier instructions, so programs are acyclic by
construction.  The cost model is non-scalar complexity: only ``mul``
instructions whose operands are both non-constant-derived count; additions,
subtractions and scalar multiples are free.  Squaring counts as one
multiplication.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly, PolyMap, as_rational

Instr = tuple

_BINARY = ("add", "sub", "mul")


@dataclass(frozen=True)
class SlpProgram:
    instructions: tuple[Instr, ...]
    outputs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "instructions", tuple(self.instructions))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        for idx, ins in enumerate(self.instructions):
            kind = ins[0]
            if kind == "input":
                if not (len(ins) == 2 and isinstance(ins[1], int) and ins[1] >= 0):
                    raise ValueError(f"%{idx}: malformed input instruction {ins!r}")
            elif kind == "const":
                if len(ins) != 2:
                    raise ValueError(f"%{idx}: malformed const instruction {ins!r}")
            elif kind in _BINARY:
                if len(ins) != 3 or not all(
                    isinstance(o, int) and 0 <= o < idx for o in ins[1:]
                ):
                    raise ValueError(
                        f"%{idx}: operands must reference earlier instructions: {ins!r}"
                    )
            elif kind == "smul":
                if len(ins) != 3 or not (isinstance(ins[2], int) and 0 <= ins[2] < idx):
                    raise ValueError(f"%{idx}: malformed smul instruction {ins!r}")
            else:
                raise ValueError(f"%{idx}: unknown instruction kind {kind!r}")
        for o in self.outputs:
            if not (isinstance(o, int) and 0 <= o < len(self.instructions)):
                raise ValueError(f"output %{o} does not reference an instruction")
        if not self.outputs:
            raise ValueError("a program needs at least one output")

    @property
    def arity(self) -> int:
        indices = [ins[1] for ins in self.instructions if ins[0] == "input"]
        return max(indices) + 1 if indices else 0


def constant_derived(prog: SlpProgram) -> list[bool]:
    """An instruction is constant-derived iff it is a const or all of its
    operands are; only products of two non-constant-derived values cost."""
    flags: list[bool] = []
    for ins in prog.instructions:
        kind = ins[0]
        if kind == "const":
            flags.append(True)
        elif kind == "input":
            flags.append(False)
        elif kind == "smul":
            flags.append(flags[ins[2]])
        else:
            flags.append(flags[ins[1]] and flags[ins[2]])
    return flags


def nonscalar_count(prog: SlpProgram) -> int:
    """Number of mul instructions between non-constant-derived operands."""
    flags = constant_derived(prog)
    return sum(
        1
        for ins in prog.instructions
        if ins[0] == "mul" and not flags[ins[1]] and not flags[ins[2]]
    )


def slp_eval(prog: SlpProgram, point) -> tuple[Fraction, ...]:
    """Exact forward evaluation at a point of rationals."""
    point = [as_rational(v) for v in point]
    if len(point) < prog.arity:
        raise ValueError(f"program reads {prog.arity} inputs, point has {len(point)}")
    values: list[Fraction] = []
    for ins in prog.instructions:
        kind = ins[0]
        if kind == "input":
            values.append(point[ins[1]])
        elif kind == "const":
            values.append(as_rational(ins[1]))
        elif kind == "add":
            values.append(values[ins[1]] + values[ins[2]])
        elif kind == "sub":
            values.append(values[ins[1]] - values[ins[2]])
        elif kind == "mul":
            values.append(values[ins[1]] * values[ins[2]])
        else:
            values.append(as_rational(ins[1]) * values[ins[2]])
    return tuple(values[o] for o in prog.outputs)


def slp_expand(prog: SlpProgram, arity: int | None = None) -> PolyMap:
    """Interpret the program symbolically, yielding its expanded PolyMap."""
    n = prog.arity if arity is None else arity
    if n < 1:
        raise ValueError("cannot expand a program with no inputs")
    values: list[Poly] = []
    for ins in prog.instructions:
        kind = ins[0]
        if kind == "input":
            values.append(Poly.variable(n, ins[1]))
        elif kind == "const":
            values.append(Poly.constant(n, as_rational(ins[1])))
        elif kind == "add":
            values.append(values[ins[1]] + values[ins[2]])
        elif kind == "sub":
            values.append(values[ins[1]] - values[ins[2]])
        elif kind == "mul":
            values.append(values[ins[1]] * values[ins[2]])
        else:
            values.append(as_rational(ins[1]) * values[ins[2]])
    return PolyMap([values[o] for o in prog.outputs])


def chain(first: SlpProgram, second: SlpProgram) -> SlpProgram:
    """Feed the outputs of ``first`` into the inputs of ``second``.

    The result computes second∘first.  Input instructions of ``second`` are
    replaced by references to the corresponding output of ``first``; nothing
    else is shared, so non-scalar counts simply add up.
    """
    if second.arity > len(first.outputs):
        raise ValueError(
            f"second program reads input {second.arity - 1} but first "
            f"produces only {len(first.outputs)} outputs"
        )
    instructions = list(first.instructions)
    remap: dict[int, int] = {}
    for idx, ins in enumerate(second.instructions):
        kind = ins[0]
        if kind == "input":
            remap[idx] = first.outputs[ins[1]]
            continue
        if kind in _BINARY:
            ins = (kind, remap[ins[1]], remap[ins[2]])
        elif kind == "smul":
            ins = (kind, ins[1], remap[ins[2]])
        remap[idx] = len(instructions)
        instructions.append(ins)
    return SlpProgram(tuple(instructions), tuple(remap[o] for o in second.outputs))


class _Builder:
    """Tiny helper: append instructions, get back their indices."""

    def __init__(self):
        self.instructions: list[Instr] = []

    def _push(self, ins: Instr) -> int:
        self.instructions.append(ins)
        return len(self.instructions) - 1

    def input(self, k):
        return self._push(("input", k))

    def const(self, q):
        return self._push(("const", as_rational(q)))

    def add(self, i, j):
        return self._push(("add", i, j))

    def sub(self, i, j):
        return self._push(("sub", i, j))

    def mul(self, i, j):
        return self._push(("mul", i, j))

    def smul(self, q, i):
        return self._push(("smul", as_rational(q), i))

    def program(self, *outputs) -> SlpProgram:
        return SlpProgram(tuple(self.instructions), tuple(outputs))


def build_stage_F() -> SlpProgram:
    """((xy-1)^2 + x^2, (xy-1)^2 + y^2) with 4 non-scalar multiplications:
    xy, the square, x^2, y^2."""
    b = _Builder()
    x, y = b.input(0), b.input(1)
    t = b.mul(x, y)
    s = b.sub(t, b.const(1))
    sq = b.mul(s, s)
    xx = b.mul(x, x)
    yy = b.mul(y, y)
    return b.program(b.add(sq, xx), b.add(sq, yy))


def build_stage_G() -> SlpProgram:
    """(x, y((xy)^2 - 4xy + 4) + x((xy)^2 - 2xy + 1)): 4 non-scalar
    multiplications (xy, its square, and the two outer products)."""
    b = _Builder()
    x, y = b.input(0), b.input(1)
    t = b.mul(x, y)
    t2 = b.mul(t, t)
    q1 = b.add(b.sub(t2, b.smul(4, t)), b.const(4))
    q2 = b.add(b.sub(t2, b.smul(2, t)), b.const(1))
    return b.program(x, b.add(b.mul(y, q1), b.mul(x, q2)))


def build_stage_H() -> SlpProgram:
    """(xy(x*(xy) - 4x + y/2) + 4x, y): 3 non-scalar multiplications
    (xy, x*(xy), and the outer product; the 4x summand is a free scalar
    multiple, so it must sit outside the product for the expansion to be
    the actual first component of the stage)."""
    b = _Builder()
    x, y = b.input(0), b.input(1)
    t = b.mul(x, y)
    u = b.mul(x, t)
    four_x = b.smul(4, x)
    inner = b.add(b.sub(u, four_x), b.smul(Fraction(1, 2), y))
    return b.program(b.add(b.mul(t, inner), four_x), y)


def factored_programs() -> dict[str, SlpProgram]:
    """The three stage programs plus the chained program for f.

    Non-scalar counts: F and G cost 4 each, H costs 3, and the chain shares
    nothing across stages, so f evaluates in 4+4+3 = 11 non-scalar
    multiplications.
    """
    f_stage = build_stage_F()
    g_stage = build_stage_G()
    h_stage = build_stage_H()
    chained = chain(chain(f_stage, g_stage), h_stage)
    return {"F": f_stage, "G": g_stage, "H": h_stage, "f": chained}


# -- text format -----------------------------------------------------------------


def serialize_slp(prog: SlpProgram) -> str:
    lines = []
    for idx, ins in enumerate(prog.instructions):
        kind = ins[0]
        if kind == "input":
            rhs = f"input {ins[1]}"
        elif kind == "const":
            q = as_rational(ins[1])
            rhs = f"const {q.numerator}/{q.denominator}"
        elif kind in _BINARY:
            rhs = f"{kind} %{ins[1]} %{ins[2]}"
        else:
            q = as_rational(ins[1])
            rhs = f"smul {q.numerator}/{q.denominator} %{ins[2]}"
        lines.append(f"%{idx} = {rhs}")
    lines.append("out " + " ".join(f"%{o}" for o in prog.outputs))
    return "\n".join(lines) + "\n"


_SLP_LINE_RE = re.compile(r"^%(\d+) = (\w+) (.*)$")
_REF_RE = re.compile(r"^%(\d+)$")
_RAT_RE = re.compile(r"^(-?\d+)/(\d+)$")


def parse_slp(text: str) -> SlpProgram:
    instructions: list[Instr] = []
    outputs: tuple[int, ...] | None = None

    def ref(tok: str, lineno: int) -> int:
        m = _REF_RE.match(tok)
        if m is None:
            raise ValueError(f"line {lineno}: expected a %k reference, got {tok!r}")
        return int(m.group(1))

    def rat(tok: str, lineno: int) -> Fraction:
        m = _RAT_RE.match(tok)
        if m is None:
            raise ValueError(f"line {lineno}: expected num/den, got {tok!r}")
        return Fraction(int(m.group(1)), int(m.group(2)))

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("out "):
            if outputs is not None:
                raise ValueError(f"line {lineno}: duplicate out line")
            outputs = tuple(ref(tok, lineno) for tok in line[4:].split())
            continue
        m = _SLP_LINE_RE.match(line)
        if m is None:
            raise ValueError(f"line {lineno}: malformed instruction {line!r}")
        idx, kind, rest = int(m.group(1)), m.group(2), m.group(3).split()
        if idx != len(instructions):
            raise ValueError(
                f"line {lineno}: instruction numbered %{idx}, expected %{len(instructions)}"
            )
        if kind == "input":
            instructions.append(("input", int(rest[0])))
        elif kind == "const":
            instructions.append(("const", rat(rest[0], lineno)))
        elif kind in _BINARY:
            instructions.append((kind, ref(rest[0], lineno), ref(rest[1], lineno)))
        elif kind == "smul":
            instructions.append(("smul", rat(rest[0], lineno), ref(rest[1], lineno)))
        else:
            raise ValueError(f"line {lineno}: unknown instruction kind {kind!r}")
    if outputs is None:
        raise ValueError("missing trailing out line")
    return SlpProgram(tuple(instructions), outputs)
