import json

from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from polylb.polylb_fvector import FaceCountVector
from polylb.polylb_polytope import FaceLattice, IncidenceStructure, VPolytope
from polylb.polylb_report import CheckReport, Failure, Params


class PolyLBJSON:
    """Plain-dict views of polylb objects.

    Integers are written as decimal strings and rationals as ["num", "den"]
    string pairs, so no consumer ever rounds an exact value. Keys come out
    in a fixed order and nothing depends on hash order, so identical inputs
    give byte-identical output.
    """

    @staticmethod
    def integer(x: int) -> str:
        return str(int(x))

    @staticmethod
    def rational(x: Fraction) -> List[str]:
        x = Fraction(x)
        return [str(x.numerator), str(x.denominator)]

    def params(self, params: Params) -> Dict[str, str]:
        return {key: str(val) for key, val in params.items()}

    def fvector(self, fvec: Optional[FaceCountVector]) -> Optional[Dict[str, Any]]:
        if fvec is None:
            return None
        return {
            "dim": self.integer(fvec.dim),
            "counts": [self.integer(c) for c in fvec.counts],
            "euler": fvec.satisfies_euler(),
        }

    def polytope(self, P: VPolytope) -> Dict[str, Any]:
        return {
            "ambient_dim": self.integer(P.ambient_dim),
            "n_vertices": self.integer(P.n_vertices),
            "vertices": [[self.rational(x) for x in v] for v in P.vertices],
        }

    def incidence(self, structure: IncidenceStructure) -> Dict[str, Any]:
        return {
            "dim": self.integer(structure.dim),
            "n_vertices": self.integer(structure.n_vertices),
            "n_facets": self.integer(structure.n_facets),
            # row v, column j: vertex v lies on facet j
            "rows": structure.row_bits(),
        }

    def lattice(self, lattice: FaceLattice) -> Dict[str, Any]:
        return {
            "dim": self.integer(lattice.dim),
            "f_vector": self.fvector(lattice.f_vector),
            "faces": [
                [[self.integer(v) for v in sorted(face)] for face in grade]
                for grade in lattice.faces
            ],
        }

    def failure(self, failure: Failure) -> Dict[str, Any]:
        return {
            "params": self.params(failure.params),
            "expected": failure.expected,
            "actual": failure.actual,
            "kind": failure.kind,
        }

    def report(self, report: CheckReport) -> Dict[str, Any]:
        return {
            "claim_id": report.claim_id,
            "passed": report.passed,
            "grid": dict(report.grid),
            "points_checked": self.integer(report.points_checked),
            "failures": [self.failure(f) for f in report.failures],
            "equality_witnesses": [self.params(p) for p in report.equality_witnesses],
            "findings": list(report.findings),
        }

    def rows(self, header: Sequence[str], rows: Sequence[Sequence[object]]) -> List[Dict[str, str]]:
        return [{h: str(cell) for h, cell in zip(header, row)} for row in rows]

    @staticmethod
    def dumps(obj: Any) -> str:
        return json.dumps(obj, indent=2) + "\n"
