"""Rotated-surface and repetition stabilizer codes plus structural condition checks.

The surface-code builder works on H x W rectangles of qubits (row-major
indexing ``q = r*W + c``).  Bulk plaquettes are weight-4 cells on a
checkerboard; boundary checks are weight-2 halves.  Two layout knobs exist:

* ``z_parity``: bulk cell (i, j) is Z-type iff (i + j) % 2 == z_parity;
* ``orientation``: "col" puts X-halves on top/bottom edges and Z-halves on
  left/right (logical X = left column, logical Z = top row); "row" is the
  90-degree rotation of that.

``build_rotated_surface_code`` freezes one variant; the knobs stay available
for the rectangular patches used by the purification protocol.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import gf2
from .pauli import PauliString


@dataclass(frozen=True)
class Plaquette:
    kind: str  # "X" or "Z"
    coord: tuple[int, int]  # plaquette coordinate, may lie on the virtual boundary
    qubits: tuple[int, ...]


@dataclass(frozen=True)
class StabilizerCode:
    """A one-logical-qubit stabilizer code with fixed generator ordering."""

    n: int
    generators: tuple[PauliString, ...]
    logical_x: PauliString
    logical_z: PauliString
    d_x: int
    d_z: int
    geometry: dict[int, tuple[int, int]] = field(default_factory=dict)
    plaquettes: tuple[Plaquette, ...] = ()
    name: str = "stabilizer"
    shape: tuple[int, int] = (0, 0)  # (rows, cols) for lattice codes

    def __post_init__(self):
        if len(self.generators) != self.n - 1:
            raise ValueError("expected n-1 generators for one logical qubit")
        for g in self.generators:
            if g.n != self.n:
                raise ValueError("generator qubit count mismatch")
        for i, a in enumerate(self.generators):
            for b in self.generators[i + 1 :]:
                if not a.commutes(b):
                    raise ValueError("generators do not commute")
            if not self.logical_x.commutes(a) or not self.logical_z.commutes(a):
                raise ValueError("logicals must commute with all generators")
        if self.logical_x.commutes(self.logical_z):
            raise ValueError("logical X and Z must anticommute")
        if symplectic_rank(self.generators) != self.n - 1:
            raise ValueError("generators are dependent")

    @property
    def num_syndromes(self) -> int:
        return 1 << (self.n - 1)

    def logical_y(self) -> PauliString:
        return (self.logical_x * self.logical_z).scaled(1)

    def syndrome_of(self, p: PauliString) -> int:
        """Syndrome bits of a Pauli error: bit i = 1 iff p anticommutes with g_i."""
        s = 0
        for i, g in enumerate(self.generators):
            if not p.commutes(g):
                s |= 1 << i
        return s

    def to_text(self) -> str:
        """Plain-text record: n, symplectic generator rows as hex, logicals, distances."""
        lines = [f"n {self.n}", f"d_x {self.d_x}", f"d_z {self.d_z}", f"name {self.name}"]
        for g in self.generators:
            lines.append(f"g {g.x:x} {g.z:x}")
        lines.append(f"lx {self.logical_x.x:x} {self.logical_x.z:x}")
        lines.append(f"lz {self.logical_z.x:x} {self.logical_z.z:x}")
        return "\n".join(lines) + "\n"


def symplectic_rank(paulis) -> int:
    """GF(2) rank of the (x|z) rows."""
    return gf2.rank(p.x | (p.z << p.n) for p in paulis)


def in_group(p: PauliString, generators) -> bool:
    """Membership of p (up to phase) in the group generated by ``generators``."""
    basis = gf2.XorBasis()
    for g in generators:
        basis.insert(g.x | (g.z << g.n))
    return basis.contains(p.x | (p.z << p.n))


def _surface_plaquettes(rows: int, cols: int, z_parity: int, orientation: str):
    if orientation not in ("col", "row"):
        raise ValueError("orientation must be 'col' or 'row'")

    def qubit(r, c):
        return r * cols + c

    plq: list[Plaquette] = []

    def cell_kind(i, j):
        return "Z" if (i + j) % 2 == z_parity else "X"

    # bulk cells
    for i in range(rows - 1):
        for j in range(cols - 1):
            sup = (qubit(i, j), qubit(i, j + 1), qubit(i + 1, j), qubit(i + 1, j + 1))
            plq.append(Plaquette(cell_kind(i, j), (i, j), sup))

    # horizontal edges (top i=-1, bottom i=rows-1): pairs within a row
    h_kind = "X" if orientation == "col" else "Z"
    for j in range(cols - 1):
        if cell_kind(-1, j) == h_kind:
            plq.append(Plaquette(h_kind, (-1, j), (qubit(0, j), qubit(0, j + 1))))
        if cell_kind(rows - 1, j) == h_kind:
            plq.append(Plaquette(h_kind, (rows - 1, j), (qubit(rows - 1, j), qubit(rows - 1, j + 1))))

    # vertical edges (left j=-1, right j=cols-1): pairs within a column
    v_kind = "Z" if orientation == "col" else "X"
    for i in range(rows - 1):
        if cell_kind(i, -1) == v_kind:
            plq.append(Plaquette(v_kind, (i, -1), (qubit(i, 0), qubit(i + 1, 0))))
        if cell_kind(i, cols - 1) == v_kind:
            plq.append(Plaquette(v_kind, (i, cols - 1), (qubit(i, cols - 1), qubit(i + 1, cols - 1))))

    # row-major plaquette order, X-type before Z-type
    plq.sort(key=lambda p: (p.kind != "X", p.coord))
    return plq


def build_surface_patch(
    rows: int,
    cols: int,
    z_parity: int = 0,
    orientation: str = "col",
    name: str | None = None,
) -> StabilizerCode:
    """Rotated-surface-code patch on a rows x cols rectangle (any dims >= 2, or a
    single row/column which degenerates to a repetition code laid out in the plane)."""
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise ValueError("patch too small")
    n = rows * cols

    if cols == 1 or rows == 1:
        return _repetition_patch(rows, cols, orientation, name)

    plq = _surface_plaquettes(rows, cols, z_parity, orientation)
    gens = []
    for p in plq:
        x = z = 0
        for q in p.qubits:
            if p.kind == "X":
                x |= 1 << q
            else:
                z |= 1 << q
        gens.append(PauliString(n, x, z, 0))

    if orientation == "col":
        lx = PauliString(n, sum(1 << (r * cols) for r in range(rows)), 0, 0)  # left column
        lz = PauliString(n, 0, sum(1 << c for c in range(cols)), 0)  # top row
        d_x, d_z = rows, cols
    else:
        lx = PauliString(n, sum(1 << c for c in range(cols)), 0, 0)  # top row
        lz = PauliString(n, 0, sum(1 << (r * cols) for r in range(rows)), 0)  # left column
        d_x, d_z = cols, rows

    geometry = {r * cols + c: (r, c) for r in range(rows) for c in range(cols)}
    return StabilizerCode(
        n=n,
        generators=tuple(gens),
        logical_x=lx,
        logical_z=lz,
        d_x=d_x,
        d_z=d_z,
        geometry=geometry,
        plaquettes=tuple(plq),
        name=name or f"surface_{rows}x{cols}",
        shape=(rows, cols),
    )


def _repetition_patch(rows: int, cols: int, orientation: str, name: str | None):
    """Degenerate 1 x d / d x 1 patch: bond ZZ checks along the line."""
    n = rows * cols
    d = max(rows, cols)
    gens = []
    coords = []
    for i in range(d):
        coords.append((i, 0) if cols == 1 else (0, i))
    for i in range(d - 1):
        gens.append(PauliString(n, 0, (1 << i) | (1 << (i + 1)), 0))
    lx = PauliString(n, (1 << n) - 1, 0, 0)
    lz = PauliString(n, 0, 1, 0)
    return StabilizerCode(
        n=n,
        generators=tuple(gens),
        logical_x=lx,
        logical_z=lz,
        d_x=d,
        d_z=1,
        geometry=dict(enumerate(coords)),
        plaquettes=tuple(
            Plaquette("Z", coords[i], (i, i + 1)) for i in range(d - 1)
        ),
        name=name or f"repetition_{d}",
        shape=(rows, cols),
    )


# The variant used throughout: X-halves on top/bottom, Z-halves on left/right,
# Z-cells on the (i+j) even checkerboard, logical X = left column, logical Z =
# top row.  The staircase encoder in circuits.py is derived for this layout.
SURFACE_Z_PARITY = 0
SURFACE_ORIENTATION = "col"


def build_rotated_surface_code(d: int) -> StabilizerCode:
    """Distance-d rotated surface code (d odd, >= 3): n = d^2, d^2 - 1 generators."""
    if d < 3 or d % 2 == 0:
        raise ValueError(
            "rotated surface code requires odd distance d >= 3 "
            "(odd X/Z distances are needed for the logical action to be unitary)"
        )
    return build_surface_patch(d, d, SURFACE_Z_PARITY, SURFACE_ORIENTATION, name=f"surface_d{d}")


def build_repetition_code(d: int) -> StabilizerCode:
    """Length-d repetition code: bond checks Z_i Z_{i+1}, logical Z = Z_0, X = X^d."""
    if d < 2:
        raise ValueError("repetition code requires d >= 2")
    return build_surface_patch(d, 1, name=f"repetition_d{d}")


@dataclass(frozen=True)
class ConditionReport:
    """Structural checks for the logical action of coherent errors to be unitary."""

    even_weight_generators: bool
    css: bool
    d_x_odd: bool
    d_z_odd: bool
    logicals_odd_weight: bool
    passed: bool
    relaxed_passed: bool


def check_theorem_conditions(code: StabilizerCode) -> ConditionReport:
    """Report the code-side conditions: (1) even-weight generators, (2) CSS with
    odd X/Z distances.  The error-model condition (time-reversal symmetry) is
    enforced where coherent-error layers are built, not here.

    CSS-ness is detected structurally from the generators; distances and
    logical weights come from the declared logical representatives (valid as
    stated parities whenever condition (1) holds, since even-weight stabilizer
    multiplication preserves logical weight parity).
    """
    even = all(g.weight() % 2 == 0 for g in code.generators)
    css = all(g.is_x_type() or g.is_z_type() for g in code.generators)
    dx_odd = code.d_x % 2 == 1
    dz_odd = code.d_z % 2 == 1
    wy = code.logical_y().weight()
    logicals_odd = (
        code.logical_x.weight() % 2 == 1
        and code.logical_z.weight() % 2 == 1
        and wy % 2 == 1
    )
    passed = even and css and dx_odd and dz_odd
    return ConditionReport(
        even_weight_generators=even,
        css=css,
        d_x_odd=dx_odd,
        d_z_odd=dz_odd,
        logicals_odd_weight=logicals_odd,
        passed=passed,
        relaxed_passed=even and logicals_odd,
    )
