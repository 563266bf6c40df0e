import sys
from pathlib import Path

# make the flat top-level packages importable from tests
sys.path.insert(0, str(Path(__file__).parent))
