import sys
from pathlib import Path

import hypothesis.strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from tcalab.partitions import partition


def partitions_st(max_part: int = 5, max_rows: int = 4):
    """Random partitions with bounded parts and rows."""
    return st.lists(
        st.integers(1, max_part), min_size=0, max_size=max_rows
    ).map(lambda xs: partition(sorted(xs, reverse=True)))
