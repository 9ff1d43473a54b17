"""Pointwise algebra of curvature-type tensors on R^n with the metric frozen to the identity.

A curvature tensor here is a quadrilinear form R(X, Y, Z, W) with

    R(X,Y,Z,W) = -R(Y,X,Z,W) = -R(X,Y,W,Z) = R(Z,W,X,Y),
    R(X,Y,Z,W) + R(Y,Z,X,W) + R(Z,X,Y,W) = 0   (first Bianchi identity).

Canonical storage is the symmetric N x N coefficient matrix on the
lexicographically ordered 2-form basis {e_i ^ e_j : i < j}, N = n(n-1)/2;
the full rank-4 table is expanded on demand.  Values are immutable after
construction and every operation is a pure function of its inputs.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

# Relative tolerance applied when validating tensors and frames at construction.
CONSTRUCTION_TOL = 1e-9
# Looser tolerance for feasibility of optimizer-produced configurations.
FEASIBILITY_TOL = 1e-6


class CurvatureError(ValueError):
    """Raised when an input violates a curvature symmetry or a frame constraint."""


# ---------------------------------------------------------------------------
# 2-form index bookkeeping
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def pair_indices(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Row/column indices (i, j), i < j, of the lex-ordered 2-form basis."""
    iu, ju = np.triu_indices(n, 1)
    iu.flags.writeable = False
    ju.flags.writeable = False
    return iu, ju


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2


def wedge(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """Coefficients of x ^ y on the 2-form basis: (x_i y_j - x_j y_i) for i < j."""
    iu, ju = pair_indices(len(x))
    return x[iu] * y[ju] - x[ju] * y[iu]


@lru_cache(maxsize=None)
def _expansion_matrix(n: int) -> np.ndarray:
    """n^2 x N matrix whose columns are the flattened matrices e_i e_j^T - e_j e_i^T."""
    iu, ju = pair_indices(n)
    N = len(iu)
    W = np.zeros((n * n, N))
    cols = np.arange(N)
    W[iu * n + ju, cols] = 1.0
    W[ju * n + iu, cols] = -1.0
    W.flags.writeable = False
    return W


def _unpack_two_form(v: np.ndarray, n: int) -> np.ndarray:
    """Antisymmetric n x n matrix with upper-triangular entries v."""
    iu, ju = pair_indices(n)
    A = np.zeros((n, n))
    A[iu, ju] = v
    A -= A.T
    return A


# ---------------------------------------------------------------------------
# The tensor type
# ---------------------------------------------------------------------------

class CurvatureTensor:
    """Algebraic curvature tensor, stored on the 2-form basis.

    Use :func:`CurvatureTensor.from_rank4` or :func:`project_to_curvature` to
    build one from a raw rank-4 table; the models below construct standard
    examples directly.
    """

    __slots__ = ("n", "mat", "label", "_rank4")

    def __init__(self, n: int, mat: np.ndarray, label: str | None = None):
        mat = np.asarray(mat, dtype=float)
        if n < 2 or mat.shape != (num_pairs(n), num_pairs(n)):
            raise CurvatureError(f"coefficient matrix has shape {mat.shape}, "
                                 f"expected ({num_pairs(n)}, {num_pairs(n)}) for n={n}")
        mat = 0.5 * (mat + mat.T)
        mat.flags.writeable = False
        self.n = n
        self.mat = mat
        self.label = label
        self._rank4 = None

    # -- construction ------------------------------------------------------

    @classmethod
    def from_rank4(cls, table: np.ndarray, tol: float = CONSTRUCTION_TOL,
                   label: str | None = None, scale: float | None = None) -> "CurvatureTensor":
        """Validate a rank-4 table against all curvature symmetries and store it.

        Raises :class:`CurvatureError` if any symmetry defect exceeds
        ``tol * max(1, |table|_max, scale)``; pass ``scale`` when the table is
        a near-cancelling combination of larger quantities.
        """
        T = np.asarray(table, dtype=float)
        if T.ndim != 4 or len(set(T.shape)) != 1:
            raise CurvatureError(f"expected an (n,n,n,n) table, got shape {T.shape}")
        n = T.shape[0]
        defect = symmetry_defect(T)
        ref = max(1.0, float(np.max(np.abs(T))), scale or 0.0)
        if defect > tol * ref:
            raise CurvatureError(
                f"symmetry defect {defect:.3e} exceeds {tol:.1e} * {ref:.3e}")
        iu, ju = pair_indices(n)
        # Average over the pair-exchange orbit to shed roundoff asymmetry.
        M = T[iu[:, None], ju[:, None], iu[None, :], ju[None, :]]
        return cls(n, M, label=label)

    # -- views -------------------------------------------------------------

    @property
    def rank4(self) -> np.ndarray:
        """Full (n,n,n,n) table R_{ijkl}; computed once and cached."""
        if self._rank4 is None:
            W = _expansion_matrix(self.n)
            T = (W @ self.mat @ W.T).reshape(self.n, self.n, self.n, self.n)
            T.flags.writeable = False
            self._rank4 = T
        return self._rank4

    def norm(self) -> float:
        """Frobenius norm of the rank-4 table (= 2 |mat|_F)."""
        return 2.0 * float(np.linalg.norm(self.mat))

    def validation_defect(self) -> float:
        """Max first-Bianchi violation of the stored coefficients (absolute)."""
        T = self.rank4
        return float(np.max(np.abs(T + T.transpose(1, 2, 0, 3) + T.transpose(2, 0, 1, 3))))

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "CurvatureTensor") -> "CurvatureTensor":
        self._check_same(other)
        return CurvatureTensor(self.n, self.mat + other.mat)

    def __sub__(self, other: "CurvatureTensor") -> "CurvatureTensor":
        self._check_same(other)
        return CurvatureTensor(self.n, self.mat - other.mat)

    def __mul__(self, c: float) -> "CurvatureTensor":
        return CurvatureTensor(self.n, float(c) * self.mat)

    __rmul__ = __mul__

    def __neg__(self) -> "CurvatureTensor":
        return CurvatureTensor(self.n, -self.mat)

    def _check_same(self, other: "CurvatureTensor") -> None:
        if not isinstance(other, CurvatureTensor) or other.n != self.n:
            raise CurvatureError("dimension mismatch between curvature tensors")

    def __repr__(self) -> str:
        tag = f", label={self.label!r}" if self.label else ""
        return f"CurvatureTensor(n={self.n}, norm={self.norm():.6g}{tag})"


def inner(R: CurvatureTensor, S: CurvatureTensor) -> float:
    """Frobenius inner product of the rank-4 tables (= 4 <mat, mat>)."""
    R._check_same(S)
    return 4.0 * float(np.vdot(R.mat, S.mat))


def zero_tensor(n: int) -> CurvatureTensor:
    return CurvatureTensor(n, np.zeros((num_pairs(n), num_pairs(n))))


# ---------------------------------------------------------------------------
# Symmetrization / projection
# ---------------------------------------------------------------------------

def symmetry_defect(T: np.ndarray) -> float:
    """Largest absolute violation among the two antisymmetries, pair symmetry
    and the first Bianchi identity of a rank-4 table."""
    d = max(
        float(np.max(np.abs(T + T.transpose(1, 0, 2, 3)))),
        float(np.max(np.abs(T + T.transpose(0, 1, 3, 2)))),
        float(np.max(np.abs(T - T.transpose(2, 3, 0, 1)))),
        float(np.max(np.abs(T + T.transpose(1, 2, 0, 3) + T.transpose(2, 0, 1, 3)))),
    )
    return d


def bianchi_cycle(T: np.ndarray) -> np.ndarray:
    """Cyclic average b(T)_{ijkl} = (T_{ijkl} + T_{jkil} + T_{kijl}) / 3."""
    return (T + T.transpose(1, 2, 0, 3) + T.transpose(2, 0, 1, 3)) / 3.0


def project_to_curvature(table: np.ndarray, n: int | None = None) -> CurvatureTensor:
    """Orthogonal projection of an arbitrary rank-4 table onto curvature tensors.

    First antisymmetrizes both index pairs and symmetrizes pair exchange, then
    removes the fully antisymmetric (Bianchi-violating) part b(T).
    """
    T = np.asarray(table, dtype=float)
    if T.ndim != 4 or len(set(T.shape)) != 1:
        raise CurvatureError(f"expected an (n,n,n,n) table, got shape {T.shape}")
    if n is not None and n != T.shape[0]:
        raise CurvatureError(f"dimension argument {n} does not match table shape {T.shape}")
    n = T.shape[0]
    if n < 2:
        raise CurvatureError("need n >= 2")
    A = 0.25 * (T - T.transpose(1, 0, 2, 3) - T.transpose(0, 1, 3, 2)
                + T.transpose(1, 0, 3, 2))
    A = 0.5 * (A + A.transpose(2, 3, 0, 1))
    P = A - bianchi_cycle(A)
    iu, ju = pair_indices(n)
    M = P[iu[:, None], ju[:, None], iu[None, :], ju[None, :]]
    return CurvatureTensor(n, M)


# ---------------------------------------------------------------------------
# Evaluation and contractions
# ---------------------------------------------------------------------------

def evaluate(R: CurvatureTensor, x, y, z, w) -> float:
    """R(x, y, z, w) for arbitrary (not necessarily unit) vectors."""
    x, y, z, w = (np.asarray(v, dtype=float) for v in (x, y, z, w))
    return float(wedge(x, y) @ R.mat @ wedge(z, w))


def curvature_map(R: CurvatureTensor, z, w) -> np.ndarray:
    """Antisymmetric matrix A with A[i, j] = R(e_i, e_j, z, w)."""
    v = R.mat @ wedge(np.asarray(z, float), np.asarray(w, float))
    return _unpack_two_form(v, R.n)


def first_slot_gradient(R: CurvatureTensor, y, z, w) -> np.ndarray:
    """Vector g with g_i = R(e_i, y, z, w); the rest follow by the symmetries."""
    return curvature_map(R, z, w) @ np.asarray(y, float)


def ricci(R: CurvatureTensor) -> np.ndarray:
    """Ricci contraction Ric_{jl} = sum_i R_{ijil}; identity * (n-1) on the sphere model."""
    return np.einsum("ijil->jl", R.rank4)


def scalar_curvature(R: CurvatureTensor) -> float:
    return float(np.trace(ricci(R)))


def kulkarni_nomizu(h: np.ndarray, k: np.ndarray) -> np.ndarray:
    """Rank-4 product (h @ k)_{ijkl} = h_ik k_jl + h_jl k_ik - h_il k_jk - h_jk k_il."""
    o = np.multiply.outer
    return (o(h, k).transpose(0, 2, 1, 3) + o(k, h).transpose(0, 2, 1, 3)
            - o(h, k).transpose(0, 2, 3, 1) - o(k, h).transpose(0, 2, 3, 1))


def weyl(R: CurvatureTensor) -> CurvatureTensor:
    """Totally trace-free part of R (n >= 4)."""
    n = R.n
    if n < 4:
        raise CurvatureError("Weyl part requires n >= 4")
    g = np.eye(n)
    ric = ricci(R)
    scal = float(np.trace(ric))
    ric0 = ric - (scal / n) * g
    T = (R.rank4 - kulkarni_nomizu(ric0, g) / (n - 2)
         - (scal / (2.0 * n * (n - 1))) * kulkarni_nomizu(g, g))
    return CurvatureTensor.from_rank4(T, tol=1e-8)


def einstein_normalize(R: CurvatureTensor, target: float | None = None) -> CurvatureTensor:
    """Add a Kulkarni-Nomizu correction so the Ricci tensor becomes target * id.

    The default target is n - 1 (unit-sphere normalization).  Uses
    Ric(h ^ g) = (n-2) h + tr(h) g to solve for the symmetric correction h.
    """
    n = R.n
    if n < 3:
        raise CurvatureError("normalization requires n >= 3")
    target = float(n - 1) if target is None else float(target)
    g = np.eye(n)
    delta = target * g - ricci(R)
    trh = np.trace(delta) / (2.0 * (n - 1))
    h = (delta - trh * g) / (n - 2.0)
    return R + CurvatureTensor.from_rank4(kulkarni_nomizu(h, g), tol=1e-8)


# ---------------------------------------------------------------------------
# The reaction bilinear form B and its quadratic form Q
# ---------------------------------------------------------------------------

def _bform_rank4(R4: np.ndarray, S4: np.ndarray) -> np.ndarray:
    """Raw rank-4 table of the symmetric bilinear reaction form B(R, S)."""
    a = np.einsum("ijpq,klpq->ijkl", R4, S4, optimize=True)
    first = 0.5 * (a + a.transpose(2, 3, 0, 1))
    plus = (np.einsum("ipkq,jplq->ijkl", R4, S4, optimize=True)
            + np.einsum("ipkq,jplq->ijkl", S4, R4, optimize=True))
    minus = (np.einsum("iplq,jpkq->ijkl", R4, S4, optimize=True)
             + np.einsum("iplq,jpkq->ijkl", S4, R4, optimize=True))
    return first + plus - minus


def bform(R: CurvatureTensor, S: CurvatureTensor) -> CurvatureTensor:
    """Symmetric bilinear form B(R, S); B(R, R) is the reaction term of the flow.

    B(R,S)(X,Y,Z,W) =
        1/2 sum_pq [R(X,Y,e_p,e_q) S(Z,W,e_p,e_q) + R(Z,W,e_p,e_q) S(X,Y,e_p,e_q)]
        + sum_pq [R(X,e_p,Z,e_q) S(Y,e_p,W,e_q) + R(Y,e_p,W,e_q) S(X,e_p,Z,e_q)]
        - sum_pq [R(X,e_p,W,e_q) S(Y,e_p,Z,e_q) + R(Y,e_p,Z,e_q) S(X,e_p,W,e_q)]
    """
    R._check_same(S)
    B4 = _bform_rank4(R.rank4, S.rank4)
    return CurvatureTensor.from_rank4(B4, tol=1e-10, scale=R.norm() * S.norm())


def qform(R: CurvatureTensor) -> CurvatureTensor:
    """Quadratic reaction term Q(R) = B(R, R)."""
    return bform(R, R)


def einstein_residual(R: CurvatureTensor, rho: float) -> float:
    """|Q(R) - 2 rho R| in Frobenius norm; zero for the parallel model tensors."""
    return (qform(R) - (2.0 * rho) * R).norm()


# ---------------------------------------------------------------------------
# Frames and complex/quaternionic structures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FourFrame:
    """Orthonormal 4-frame, stored as the n x 4 matrix of column vectors."""

    matrix: np.ndarray
    tol: float = CONSTRUCTION_TOL

    def __post_init__(self):
        m = np.asarray(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[1] != 4 or m.shape[0] < 4:
            raise CurvatureError(f"a 4-frame needs an (n, 4) matrix with n >= 4, got {m.shape}")
        defect = float(np.max(np.abs(m.T @ m - np.eye(4))))
        if defect > self.tol:
            raise CurvatureError(f"frame Gram defect {defect:.3e} exceeds {self.tol:.1e}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @classmethod
    def from_vectors(cls, e1, e2, e3, e4, tol: float = CONSTRUCTION_TOL) -> "FourFrame":
        return cls(np.column_stack([e1, e2, e3, e4]), tol=tol)

    @property
    def vectors(self) -> tuple[np.ndarray, ...]:
        return tuple(self.matrix[:, a] for a in range(4))

    @property
    def n(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ComplexStructure:
    """Orthogonal matrix J with J^2 = -id on R^n, n even."""

    matrix: np.ndarray
    tol: float = CONSTRUCTION_TOL

    def __post_init__(self):
        J = np.asarray(self.matrix, dtype=float)
        n = J.shape[0]
        if J.ndim != 2 or J.shape != (n, n) or n % 2 != 0:
            raise CurvatureError("a complex structure needs a square matrix of even size")
        eye = np.eye(n)
        defect = max(float(np.max(np.abs(J.T @ J - eye))),
                     float(np.max(np.abs(J @ J + eye))))
        if defect > self.tol:
            raise CurvatureError(f"complex-structure defect {defect:.3e} exceeds {self.tol:.1e}")
        J.flags.writeable = False
        object.__setattr__(self, "matrix", J)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def __call__(self, x: np.ndarray) -> np.ndarray:
        return self.matrix @ np.asarray(x, float)


@dataclass(frozen=True)
class QuaternionTriple:
    """Complex structures (I, J, K) with IJ = K (hence IJK = -id); n = 4m."""

    I: ComplexStructure
    J: ComplexStructure
    K: ComplexStructure
    tol: float = CONSTRUCTION_TOL

    def __post_init__(self):
        n = self.I.n
        if self.J.n != n or self.K.n != n or n % 4 != 0:
            raise CurvatureError("quaternion triple needs matching structures on R^(4m)")
        defect = float(np.max(np.abs(self.I.matrix @ self.J.matrix - self.K.matrix)))
        if defect > self.tol:
            raise CurvatureError(f"triple violates IJ = K by {defect:.3e}")

    @property
    def n(self) -> int:
        return self.I.n

    @property
    def matrices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.I.matrix, self.J.matrix, self.K.matrix)

    def combination(self, a: float, b: float, c: float) -> ComplexStructure:
        """Unit combination a I + b J + c K, itself a complex structure."""
        coeffs = np.array([a, b, c], dtype=float)
        nrm = float(np.linalg.norm(coeffs))
        if abs(nrm - 1.0) > FEASIBILITY_TOL:
            raise CurvatureError("combination coefficients must lie on the unit sphere")
        A = sum(c_s * M for c_s, M in zip(coeffs / nrm, self.matrices))
        return ComplexStructure(A)


def standard_complex_structure(n: int) -> ComplexStructure:
    """J acting blockwise: e_{2a} -> e_{2a+1}, e_{2a+1} -> -e_{2a}."""
    if n % 2 != 0 or n < 2:
        raise CurvatureError("need even n >= 2")
    J = np.zeros((n, n))
    for a in range(n // 2):
        J[2 * a + 1, 2 * a] = 1.0
        J[2 * a, 2 * a + 1] = -1.0
    return ComplexStructure(J)


def standard_quaternion_triple(n: int) -> QuaternionTriple:
    """Left multiplication by i, j, k on R^(4m) = H^m (basis 1, i, j, k per block)."""
    if n % 4 != 0 or n < 4:
        raise CurvatureError("need n divisible by 4")
    I = np.zeros((n, n))
    J = np.zeros((n, n))
    K = np.zeros((n, n))
    for b in range(0, n, 4):
        # i: 1 -> i, i -> -1, j -> k, k -> -j
        I[b + 1, b] = 1.0
        I[b, b + 1] = -1.0
        I[b + 3, b + 2] = 1.0
        I[b + 2, b + 3] = -1.0
        # j: 1 -> j, i -> -k, j -> -1, k -> i
        J[b + 2, b] = 1.0
        J[b + 3, b + 1] = -1.0
        J[b, b + 2] = -1.0
        J[b + 1, b + 3] = 1.0
        # k: 1 -> k, i -> j, j -> -i, k -> -1
        K[b + 3, b] = 1.0
        K[b + 2, b + 1] = 1.0
        K[b + 1, b + 2] = -1.0
        K[b, b + 3] = -1.0
    return QuaternionTriple(ComplexStructure(I), ComplexStructure(J), ComplexStructure(K))


def rotate_triple(T: QuaternionTriple, rot: np.ndarray) -> QuaternionTriple:
    """Replace (I, J, K) by an SO(3)-rotated triple spanning the same structure sphere."""
    rot = np.asarray(rot, dtype=float)
    if rot.shape != (3, 3) or np.max(np.abs(rot @ rot.T - np.eye(3))) > 1e-9 \
            or np.linalg.det(rot) < 0:
        raise CurvatureError("need a rotation matrix in SO(3)")
    mats = T.matrices
    new = [sum(rot[s, t] * mats[t] for t in range(3)) for s in range(3)]
    return QuaternionTriple(*(ComplexStructure(A) for A in new))


# ---------------------------------------------------------------------------
# Frame functionals
# ---------------------------------------------------------------------------

def isotropic_curvature(R: CurvatureTensor, frame: FourFrame) -> float:
    """R(e1,e3,e1,e3) + R(e1,e4,e1,e4) + R(e2,e3,e2,e3) + R(e2,e4,e2,e4)
    - 2 R(e1,e2,e3,e4) on an orthonormal 4-frame."""
    if frame.n != R.n:
        raise CurvatureError("frame dimension does not match tensor dimension")
    return isotropic_from_columns(R.mat, frame.matrix)


def isotropic_from_columns(mat: np.ndarray, F: np.ndarray) -> float:
    """Isotropic-curvature value from the raw column matrix (no validation)."""
    e1, e2, e3, e4 = F.T
    w13, w14 = wedge(e1, e3), wedge(e1, e4)
    w23, w24 = wedge(e2, e3), wedge(e2, e4)
    w12, w34 = wedge(e1, e2), wedge(e3, e4)
    return float(w13 @ mat @ w13 + w14 @ mat @ w14 + w23 @ mat @ w23
                 + w24 @ mat @ w24 - 2.0 * (w12 @ mat @ w34))


def orthogonal_bisectional(R: CurvatureTensor, J: ComplexStructure, x, y,
                           tol: float = FEASIBILITY_TOL) -> float:
    """R(X, JX, Y, JY) for unit X, Y with Y orthogonal to X and JX."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    jx = J(x)
    violation = max(abs(float(x @ x) - 1.0), abs(float(y @ y) - 1.0),
                    abs(float(x @ y)), abs(float(jx @ y)))
    if violation > tol:
        raise CurvatureError(f"bisectional constraint violation {violation:.3e} > {tol:.1e}")
    return evaluate(R, x, jx, y, J(y))


def holomorphic_sectional(R: CurvatureTensor, J: ComplexStructure, x) -> float:
    """R(X, JX, X, JX); scales as |X|^4."""
    x = np.asarray(x, dtype=float)
    jx = J(x)
    return evaluate(R, x, jx, x, jx)


# ---------------------------------------------------------------------------
# Model tensors
# ---------------------------------------------------------------------------

def model_sphere(n: int, lam: float = 1.0) -> CurvatureTensor:
    """Constant sectional curvature lam: R_{ijkl} = lam (g_ik g_jl - g_il g_jk)."""
    if n < 2:
        raise CurvatureError("need n >= 2")
    return CurvatureTensor(n, float(lam) * np.eye(num_pairs(n)), label=f"sphere(n={n})")


def model_kahler_form(J: ComplexStructure, scale: float = 1.0) -> CurvatureTensor:
    """Curvature tensor built from the 2-form of J:

    S(X,Y,Z,W) = 2 g(JX,Y) g(JZ,W) + g(JX,Z) g(JY,W) - g(JX,W) g(JY,Z).
    """
    P = J.matrix.T  # P_{ij} = g(J e_i, e_j)
    o = np.multiply.outer
    T = (2.0 * o(P, P) + o(P, P).transpose(0, 2, 1, 3)
         - o(P, P).transpose(0, 2, 3, 1)) * float(scale)
    return CurvatureTensor.from_rank4(T, label="kahler-form")


def model_fubini_study(m: int, c: float = 4.0) -> tuple[CurvatureTensor, ComplexStructure]:
    """Constant holomorphic sectional curvature c on R^(2m), m >= 2.

    Returns the tensor together with the complex structure it is built from.
    """
    if m < 2:
        raise CurvatureError("need complex dimension m >= 2")
    n = 2 * m
    J = standard_complex_structure(n)
    R = (c / 4.0) * (model_sphere(n, 1.0) + model_kahler_form(J))
    return CurvatureTensor(n, R.mat, label=f"fubini-study(m={m}, c={c})"), J


def model_quaternionic_projective(T: QuaternionTriple, scale: float = 1.0) -> CurvatureTensor:
    """Quaternionic projective model R0 on R^(4m):

    4 R0 = sphere(n, 1) + sum over A in {I, J, K} of the form of model_kahler_form(A).
    """
    n = T.n
    R = model_sphere(n, 1.0)
    for A in (T.I, T.J, T.K):
        R = R + model_kahler_form(A)
    return CurvatureTensor(n, (float(scale) / 4.0) * R.mat, label=f"quaternionic(n={n})")


# Short aliases matching the CLI model names.
model_r0 = model_quaternionic_projective
model_sj = model_kahler_form
