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

from contextlib import contextmanager
import errno
import os
from shutil import rmtree
from tempfile import mkdtemp

from .constants import FLOAT_FORMAT


@contextmanager
def NamedTemporaryDir(**kwargs):
    dirname = mkdtemp(**kwargs)
    yield dirname
    rmtree(dirname, ignore_errors=True)


def makedirs(d, ignore_exists=False):
    """Like `os.makedirs`, but doesn't raise OSError if ignore_exists."""
    try:
        os.makedirs(d)
    except OSError as e:
        if ignore_exists and e.errno == errno.EEXIST:
            return
        raise


def popcount(x):
    return bin(x).count('1')


def gather_bits(config, positions):
    """Packs the bits of `config` found at `positions` into a new word.

    Bit j of the result is bit ``positions[j]`` of `config`.
    """
    result = 0
    for j, p in enumerate(positions):
        result |= ((config >> p) & 1) << j
    return result


def format_float(x):
    """Stable text for a float, identical across runs and platforms."""
    return FLOAT_FORMAT.format(float(x))
