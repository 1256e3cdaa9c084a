import io

import pandas as pd

from .models import InvalidDistribution


def distribution_frame(dist: InvalidDistribution) -> pd.DataFrame:
    ells = sorted(dist.counts)
    return pd.DataFrame({"ell": ells, "count": [str(dist.counts[ell]) for ell in ells]})


def distribution_csv(dist: InvalidDistribution) -> str:
    """CSV `ell,count` preceded by a `# geometry=... n=... source=...` comment"""
    buffer = io.StringIO()
    buffer.write(f"# geometry={dist.geometry} n={dist.n} source={dist.source.value}\n")
    distribution_frame(dist).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()
