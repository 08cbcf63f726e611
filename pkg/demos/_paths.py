from pathlib import Path

from importlib import resources

FIXTURES = Path(str(resources.files("pampo").joinpath("data", "fixtures")))
DATA = Path(__file__).parent / "data"
