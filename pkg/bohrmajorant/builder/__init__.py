from .specs import FunctionSpec, MoebiusSpec, BlaschkeSpec, InnerSpec, SchurSpec, PolySpec, ConstSpec, KoebeSpec, \
    DilatedSpec, SeriesSpec, from_json, random_schwarz_spec, random_bounded_spec
from .grammar import parse_function, load_spec_file
from .config import RunConfig
