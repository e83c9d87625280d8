"""Wire schemas."""

from src.schemas.common import *
from src.schemas.instance import *
from src.schemas.pipeline import *
from src.schemas.dictatorship import *
