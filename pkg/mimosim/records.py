#-*- coding: utf-8 -*-

import numpy as np
import pandas as pd

from .sim.experiments import ExperimentRecord

# Header and float format of the result CSV
COLUMNS = list(ExperimentRecord.fields)
FLOAT_FORMAT = '%.17g'
DTYPES = {'experiment': str, 'scheme': str, 'sweep_name': str, 'sweep_value': float,
          'metric': float, 'stderr': float, 'trials': np.int64, 'seed': np.uint64}


def to_frame(records):
    """
    Data frame with one row per record and the fixed column order.
    """
    data = {name: [getattr(record, name) for record in records] for name in COLUMNS}
    df = pd.DataFrame(data, columns=COLUMNS)
    return df.astype(DTYPES)


def write_records(records, path):
    """
    Write records as CSV with 17 significant digits, so identical records give
    byte-identical files.
    """
    to_frame(records).to_csv(path, index=False, float_format=FLOAT_FORMAT, lineterminator='\n')
    return


def read_records(path):
    """
    Parse a result CSV back into ExperimentRecords.
    """
    # The default C float parser may drop the last digit of a 17-digit value
    df = pd.read_csv(path, dtype=DTYPES, keep_default_na=False, float_precision='round_trip')
    missing = [name for name in COLUMNS if name not in df.columns]
    if missing:
        raise ValueError('Result file %s lacks columns: %s' % (path, ', '.join(missing)))
    return [ExperimentRecord(**{name: row[name] for name in COLUMNS})
            for row in df.to_dict(orient='records')]


# end of file
