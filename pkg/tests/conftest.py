import sys
from pathlib import Path

# allow acceptance tests to import sibling test modules' oracles
sys.path.insert(0, str(Path(__file__).parent))
