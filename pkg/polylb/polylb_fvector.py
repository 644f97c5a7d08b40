from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from polylb.polylb_errors import DomainError


@dataclass(frozen=True)
class FaceCountVector:
    """Exact face counts (f_0, ..., f_{d-1}) of a d-polytope.

    With `realized` set, the vector claims to come from an actual
    polytope, so it must have at least d+1 vertices and facets and
    satisfy the Euler-Poincare-Schlafli relation.
    """

    dim: int
    counts: Tuple[int, ...]
    realized: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        params = {"dim": self.dim, "counts": self.counts}
        if self.dim < 1:
            raise DomainError("dimension must be positive", params)
        if len(self.counts) != self.dim:
            raise DomainError("need exactly one count per face dimension", params)
        if any(c < 0 for c in self.counts):
            raise DomainError("face counts are nonnegative", params)
        if self.realized:
            if self.counts[0] < self.dim + 1 or self.counts[-1] < self.dim + 1:
                raise DomainError(
                    "a realized d-polytope has at least d+1 vertices and facets",
                    params,
                )
            if self.euler_characteristic() != self.euler_target(self.dim):
                raise DomainError("violates the Euler relation", params)

    @staticmethod
    def of(counts: Sequence[int], realized: bool = False) -> "FaceCountVector":
        return FaceCountVector(len(counts), tuple(counts), realized)

    @staticmethod
    def euler_target(dim: int) -> int:
        """1 - (-1)^d"""
        return 1 - (-1) ** dim

    def euler_characteristic(self) -> int:
        """Alternating sum f_0 - f_1 + f_2 - ..."""
        return sum((-1) ** i * c for i, c in enumerate(self.counts))

    def satisfies_euler(self) -> bool:
        return self.euler_characteristic() == self.euler_target(self.dim)

    def __getitem__(self, k: int) -> int:
        return self.counts[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return self.dim

    def f(self, k: int) -> int:
        """f_k with the conventions f_{-1} = 1 and f_d = 1."""
        if k == -1 or k == self.dim:
            return 1
        if 0 <= k < self.dim:
            return self.counts[k]
        return 0

    def reversed(self) -> "FaceCountVector":
        """The f-vector of the polar dual."""
        return FaceCountVector(self.dim, self.counts[::-1], self.realized)

    def pyramid(self) -> "FaceCountVector":
        """The f-vector of a pyramid: f_k + f_{k-1}."""
        counts = [self.f(k) + self.f(k - 1) for k in range(self.dim)]
        counts.append(self.counts[-1] + 1)
        return FaceCountVector(self.dim + 1, tuple(counts), self.realized)

    def product(self, other: "FaceCountVector") -> "FaceCountVector":
        """f-vector of a Cartesian product; each factor's top face takes part."""
        p, q = self.dim, other.dim
        counts = [
            sum(self.f(i) * other.f(k - i) for i in range(max(0, k - q), min(p, k) + 1))
            for k in range(p + q)
        ]
        return FaceCountVector(p + q, tuple(counts), self.realized and other.realized)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.counts) + ")"
