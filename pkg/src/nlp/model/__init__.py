"""Association parameter estimation."""

from nlp.model.ParameterTable import ParameterTable, CONCEPTUAL, LEXICAL, save_params, load_params
from nlp.model.Estimator import estimate_conceptual, estimate_lexical, estimate, NORMALIZED, PRINTED

__all__ = [
    'ParameterTable', 'CONCEPTUAL', 'LEXICAL', 'save_params', 'load_params',
    'estimate_conceptual', 'estimate_lexical', 'estimate', 'NORMALIZED', 'PRINTED',
]
