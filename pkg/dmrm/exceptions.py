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


class DmrmError(RuntimeError):
    pass


class ValidationError(DmrmError, ValueError):
    pass


class OddPeriodicError(ValidationError):
    """A periodic ladder needs an even number of rungs."""
    pass


class UnmatchedSiteError(ValidationError):
    pass


class SupportMismatchError(ValidationError):
    pass


class DimensionError(ValidationError):
    pass


class SubsetRangeError(ValidationError):
    pass


class ParityError(ValidationError):
    """Wrong parity of legs or rungs for the requested construction."""
    pass


class ResourceCapError(DmrmError):
    def __init__(self, what, value, cap):
        super(ResourceCapError, self).__init__(what, value, cap)
        self.what = what
        self.value = value
        self.cap = cap

    def __str__(self):
        return '{0} {1!r} exceeds cap {2!r}'.format(self.what, self.value,
                                                   self.cap)


class BasisIncompleteError(DmrmError, ValueError):
    """Vector has a nonzero residual against the rung basis."""
    def __init__(self, residual, message=None):
        super(BasisIncompleteError, self).__init__(residual)
        self.residual = residual
        self.message = message

    def __str__(self):
        s = 'basis incomplete: residual norm {0!r}'.format(self.residual)
        if self.message:
            s += ': ' + self.message
        return s


class VerificationError(DmrmError):
    def __init__(self, deviation, tolerance, what=''):
        super(VerificationError, self).__init__(deviation, tolerance, what)
        self.deviation = deviation
        self.tolerance = tolerance
        self.what = what

    def __str__(self):
        return '{0} deviation {1!r} above tolerance {2!r}'.format(
            self.what or 'verification', self.deviation, self.tolerance
        ).lstrip()


class SchemaError(DmrmError, ValueError):
    pass
