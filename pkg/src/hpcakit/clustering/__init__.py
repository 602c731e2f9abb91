"""Statistical clustering by eigenvector signs."""

from hpcakit.clustering.composition import cluster_composition
from hpcakit.clustering.signs import sign_clusters, sign_signatures

__all__ = ["cluster_composition", "sign_clusters", "sign_signatures"]
