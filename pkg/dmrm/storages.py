# -*- coding: utf-8 -*-

# Licensed to Ecometrica under one or more contributor license
# agreements.  See the NOTICE file distributed with this work
# for additional information regarding copyright ownership.
# Ecometrica licenses this file to you under the Apache
# License, Version 2.0 (the "License"); you may not use this
# file except in compliance with the License.  You may obtain a
# copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied.  See the License for the
# specific language governing permissions and limitations
# under the License.

from __future__ import (absolute_import, division, print_function,
                        unicode_literals)

import csv
import io
import json
import logging
import os
import platform
import re

import numexpr
import numpy
import scipy

from . import __version__
from .constants import CSV_HEADER, SCHEMA_FILENAME
from .dm_types import SweepRow
from .exceptions import SchemaError, ValidationError
from .utils import format_float, makedirs


logger = logging.getLogger(__name__)
logger.addHandler(logging.NullHandler())


SCHEMA_PATH = os.path.join(os.path.dirname(__file__), 'schemas',
                           SCHEMA_FILENAME)


def library_versions():
    return {
        'dmrm': __version__,
        'python': platform.python_version(),
        'numpy': numpy.__version__,
        'scipy': scipy.__version__,
        'numexpr': numexpr.__version__,
    }


def load_schema(path=SCHEMA_PATH):
    with io.open(path, encoding='utf-8') as f:
        return json.load(f)


_TYPES = {
    'object': (dict,),
    'array': (list, tuple),
    'string': (str,),
    'boolean': (bool,),
    'null': (type(None),),
}


def _is_type(value, name):
    if name == 'integer':
        return isinstance(value, int) and not isinstance(value, bool)
    if name == 'number':
        return (isinstance(value, (int, float)) and
                not isinstance(value, bool))
    return isinstance(value, _TYPES[name])


def validate_payload(payload, schema, path='$'):
    """Checks `payload` against the subset of JSON Schema the sidecar uses.

    Raises `SchemaError` naming the first offending path.
    """
    expected = schema.get('type')
    if expected is not None:
        names = expected if isinstance(expected, list) else [expected]
        if not any(_is_type(payload, n) for n in names):
            raise SchemaError('{0}: {1!r} is not of type {2}'.format(
                path, payload, ' or '.join(names)
            ))
    if 'enum' in schema and payload not in schema['enum']:
        raise SchemaError('{0}: {1!r} must be one of: {2}'.format(
            path, payload, ', '.join(str(v) for v in schema['enum'])
        ))
    if ('minimum' in schema and _is_type(payload, 'number') and
            payload < schema['minimum']):
        raise SchemaError('{0}: {1!r} is below {2!r}'.format(
            path, payload, schema['minimum']
        ))
    if ('pattern' in schema and isinstance(payload, str) and
            not re.search(schema['pattern'], payload)):
        raise SchemaError('{0}: {1!r} does not match {2!r}'.format(
            path, payload, schema['pattern']
        ))

    if isinstance(payload, dict):
        properties = schema.get('properties', {})
        for key in schema.get('required', []):
            if key not in payload:
                raise SchemaError('{0}: missing key {1!r}'.format(path, key))
        if schema.get('additionalProperties', True) is False:
            extra = set(payload) - set(properties)
            if extra:
                raise SchemaError('{0}: unexpected keys {1}'.format(
                    path, ', '.join(sorted(extra))
                ))
        for key, value in payload.items():
            if key in properties:
                validate_payload(value, properties[key],
                                 '{0}.{1}'.format(path, key))
    elif isinstance(payload, (list, tuple)) and 'items' in schema:
        for i, value in enumerate(payload):
            validate_payload(value, schema['items'],
                             '{0}[{1}]'.format(path, i))


def _csv_value(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, float):
        return format_float(value)
    return str(value)


def format_row(row):
    return [_csv_value(v) for v in row]


def parse_row(fields):
    if len(fields) != len(CSV_HEADER):
        raise ValidationError('expected {0} columns, got {1}'.format(
            len(CSV_HEADER), len(fields)
        ))
    legs, rungs, periodic, ggm, lam, subset, p, neg, log2_norm = fields
    if periodic not in ('true', 'false'):
        raise ValidationError('periodic must be true or false: {0!r}'.format(
            periodic
        ))
    return SweepRow(legs=int(legs), rungs=int(rungs),
                    periodic=periodic == 'true', ggm=float(ggm),
                    lambda_sq_max=float(lam), argmax_subset=subset,
                    werner_p=float(p), negativity=float(neg),
                    log2_norm=float(log2_norm))


class Storage(object):
    """Base class for sweep storages."""

    filename = None

    def __init__(self, outputdir):
        """
        Initializes storage.

        outputdir: Directory receiving the file; created if missing.
        """
        self.outputdir = outputdir
        makedirs(self.outputdir, ignore_exists=True)

    def __enter__(self):
        return self

    def __exit__(self, type, value, traceback):
        return

    @property
    def filepath(self):
        return os.path.join(self.outputdir, self.filename)

    def save(self, points, config=None, wall_time=None):
        """Writes sweep `points` to `filepath`."""
        raise NotImplementedError()


class CsvStorage(Storage):
    """Saves sweep rows as 'sweep.csv', one row per (legs, rungs)."""

    filename = 'sweep.csv'

    def save(self, points, config=None, wall_time=None):
        with io.open(self.filepath, 'w', newline='', encoding='utf-8') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(CSV_HEADER)
            for point in points:
                writer.writerow(format_row(point.row))
        logger.info('Wrote {0}'.format(self.filepath))
        return self.filepath

    def load(self):
        with io.open(self.filepath, newline='', encoding='utf-8') as f:
            reader = csv.reader(f)
            header = tuple(next(reader))
            if header != CSV_HEADER:
                raise ValidationError('unexpected header: {0!r}'.format(
                    header
                ))
            return [parse_row(fields) for fields in reader]


class JsonStorage(Storage):
    """Saves the sweep sidecar 'sweep.json': config, versions, rows with
    exact norms as decimal strings, and wall times."""

    filename = 'sweep.json'

    def __init__(self, outputdir, schema=None):
        super(JsonStorage, self).__init__(outputdir=outputdir)
        if schema is None:
            schema = load_schema()
        self.schema = schema

    def payload(self, points, config, wall_time):
        rows = []
        for point in points:
            row = point.row._asdict()
            row.update(norm=str(point.norm), seconds=point.seconds)
            rows.append(dict(row))
        settings = config.as_dict()
        settings['rungs_range'] = list(settings['rungs_range'])
        return {
            'version': __version__,
            'config': settings,
            'versions': library_versions(),
            'rows': rows,
            'wall_time': wall_time,
        }

    def save(self, points, config=None, wall_time=None):
        payload = self.payload(points, config, wall_time or 0.0)
        validate_payload(payload, self.schema)
        with io.open(self.filepath, 'w', encoding='utf-8') as f:
            f.write(json.dumps(payload, indent=2, sort_keys=True))
            f.write('\n')
        logger.info('Wrote {0}'.format(self.filepath))
        return self.filepath

    def load(self):
        with io.open(self.filepath, encoding='utf-8') as f:
            payload = json.load(f)
        validate_payload(payload, self.schema)
        return payload


PLOT_SCRIPT = '''\
#!/usr/bin/env python
# GGM against rungs, one series per number of legs.
import json
import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
with open(os.path.join(here, {sidecar!r})) as f:
    rows = json.load(f)['rows']

figure, axes = plt.subplots()
for legs in sorted(set(r['legs'] for r in rows)):
    series = sorted((r['rungs'], r['ggm']) for r in rows if r['legs'] == legs)
    axes.plot([s[0] for s in series], [s[1] for s in series], marker='o',
              label='M = {{0}}'.format(legs))
axes.set_xlabel('rungs')
axes.set_ylabel('GGM')
axes.legend()
figure.savefig(os.path.join(here, {image!r}))
'''


class PlotScriptStorage(Storage):
    """Saves 'plot_sweep.py', which draws GGM curves from the sidecar."""

    filename = 'plot_sweep.py'

    def save(self, points, config=None, wall_time=None):
        with io.open(self.filepath, 'w', encoding='utf-8') as f:
            f.write(PLOT_SCRIPT.format(sidecar=JsonStorage.filename,
                                       image='sweep.png'))
        logger.info('Wrote {0}'.format(self.filepath))
        return self.filepath


def save_sweep(points, config, wall_time):
    """Writes the sweep files for `config.output_format` into `config.out`.

    The JSON sidecar and the plot script are always written.
    """
    storages = [JsonStorage(config.out), PlotScriptStorage(config.out)]
    if config.output_format == 'csv':
        storages.insert(0, CsvStorage(config.out))
    written = []
    for storage in storages:
        with storage:
            written.append(storage.save(points, config=config,
                                        wall_time=wall_time))
    return written
