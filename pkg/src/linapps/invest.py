"""Sector investment with yearly profit redistribution.

Each sector j turns one unit of stake into g_j units after a year.  The sector
keeps min(g_j, 1) of its stake in place and the profit max(g_j - 1, 0) is
split equally across all n sectors, so

    transition[i][j] = [i == j] * min(g_j, 1) + max(g_j - 1, 0) / n.

An allocation that grows proportionally is a nonnegative eigenvector of the
transition matrix; the largest such eigenvalue is preferred.
"""

from dataclasses import dataclass
from fractions import Fraction

from .eigen import char_poly, eigenspace, numeric_roots, rational_roots
from .errors import (
    DomainError,
    ExactnessUnavailableError,
    InfeasibleError,
    ShapeError,
)
from .matrix import Matrix
from .scalar import as_scalar


@dataclass(frozen=True)
class SectorSpec:
    name: str
    growth_factor: Fraction

    def __post_init__(self):
        g = as_scalar(self.growth_factor)
        if g < 0:
            raise DomainError(f"sector {self.name!r}: negative growth factor")
        object.__setattr__(self, "growth_factor", g)


@dataclass(frozen=True)
class InvestmentModel:
    sectors: tuple
    transition: Matrix

    @property
    def n(self):
        return len(self.sectors)

    @property
    def growth_factors(self):
        return tuple(s.growth_factor for s in self.sectors)


@dataclass(frozen=True)
class Allocation:
    amounts: tuple
    budget: Fraction
    growth_rate: Fraction


def build_transition(specs) -> InvestmentModel:
    specs = tuple(
        s if isinstance(s, SectorSpec) else SectorSpec(*s) for s in specs
    )
    if not specs:
        raise DomainError("at least one sector is required")
    n = len(specs)
    g = [s.growth_factor for s in specs]
    one, zero = Fraction(1), Fraction(0)
    rows = [
        [(min(g[j], one) if i == j else zero) + max(g[j] - one, zero) / n for j in range(n)]
        for i in range(n)
    ]
    return InvestmentModel(specs, Matrix(rows))


def model_from_transition(transition: Matrix, names=None) -> InvestmentModel:
    """Model with a given transition matrix; growth factors are its column sums."""
    if not transition.is_square:
        raise ShapeError("transition matrix must be square")
    n = transition.nrows
    names = names or [chr(ord("A") + i) for i in range(n)]
    if len(names) != n:
        raise ShapeError("need one name per sector")
    return InvestmentModel(
        tuple(SectorSpec(nm, max(sum(transition.col(j)), Fraction(0))) for j, nm in enumerate(names)),
        transition,
    )


def sectors_from_factors(factors, names=None):
    """Convenience: growth factors (and optional names, default A, B, C...)."""
    factors = [as_scalar(f) for f in factors]
    if names is None:
        names = [chr(ord("A") + i) for i in range(len(factors))]
    if len(names) != len(factors):
        raise ShapeError("need one name per growth factor")
    return [SectorSpec(nm, f) for nm, f in zip(names, factors)]


def _candidate_vectors(basis):
    """Basis-vector sum first (uniform tie-break), then each basis vector."""
    if len(basis) == 1:
        return list(basis)
    total = tuple(sum(col) for col in zip(*basis))
    return [total, *basis]


def _nonnegative(v):
    return all(x >= 0 for x in v) and any(x > 0 for x in v)


def optimal_allocation(model: InvestmentModel, budget) -> Allocation:
    """Proportional-growth allocation for the largest feasible eigenvalue."""
    budget = as_scalar(budget)
    if budget <= 0:
        raise DomainError("budget must be positive")
    t = model.transition
    if model.n == 1:
        return Allocation((budget,), budget, t[0, 0])
    found = rational_roots(char_poly(t))
    exact = sorted((r for r, _ in found.roots), reverse=True)
    irrational = [r.value for r in numeric_roots(found.remainder) if r.is_real]
    for lam in exact:
        vec = next((v for v in _candidate_vectors(eigenspace(t, lam)) if _nonnegative(v)), None)
        if vec is None:
            continue
        if any(x > lam for x in irrational):
            break
        scale = budget / sum(vec)
        return Allocation(tuple(scale * x for x in vec), budget, lam)
    if irrational:
        raise ExactnessUnavailableError(
            "the best growth rate is irrational; no exact allocation exists"
        )
    raise InfeasibleError("no eigenvector with nonnegative entries")


def evolve(model: InvestmentModel, allocation, years: int) -> tuple:
    """transition**years applied to the allocation."""
    if isinstance(allocation, Allocation):
        allocation = allocation.amounts
    allocation = tuple(as_scalar(x) for x in allocation)
    if len(allocation) != model.n:
        raise ShapeError(f"allocation has {len(allocation)} entries for {model.n} sectors")
    if years < 0:
        raise DomainError("years must be >= 0")
    x = allocation
    for _ in range(years):
        x = model.transition.apply(x)
    return x
