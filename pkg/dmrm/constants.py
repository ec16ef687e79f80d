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


# Oracle limits
DEFAULT_SITE_CAP = 24           # spins in an exact state vector
LEGS_CAP = 7                    # rung dimension 2**7
EXACT_GGM_CAP = 16              # spins for the full bipartition scan

# Tolerances
PSD_TOLERANCE = 1e-9            # relative to the largest eigenvalue
TRACE_TOLERANCE = 1e-12
EIGEN_TOLERANCE = 1e-11
WERNER_TOLERANCE = 1e-10
VERIFY_TOLERANCE = 1e-10

# Output
CSV_HEADER = ('legs', 'rungs', 'periodic', 'ggm', 'lambda_sq_max',
              'argmax_subset', 'werner_p', 'negativity', 'log2_norm')
FLOAT_FORMAT = '{0:.17g}'
SCHEMA_FILENAME = 'sweep.schema.json'

# Exit codes
EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_VERIFICATION = 2
EXIT_RESOURCE_CAP = 3
