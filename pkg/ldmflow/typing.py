from typing import Dict
from typing import List
from typing import Tuple
from typing import Union
import numpy


ODPair = Tuple[str, str]
TimesType = Union[float, numpy.ndarray]
ReportType = List[str]
RatesType = Dict[str, numpy.ndarray]
