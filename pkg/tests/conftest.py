# Copyright Amazon.com, Inc. or its affiliates. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License"). You may not use this file except in compliance with
# the License. A copy of the License is located at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# or in the "license" file accompanying this file. This file is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR
# CONDITIONS OF ANY KIND, either express or implied. See the License for the specific language governing permissions
# and limitations under the License.
import pytest


def pytest_addoption(parser):
    # Collect config values from cmd line or setup.cfg
    parser.addoption(
        "--seed_count", action="store", default="20", help="number of seeds drawn by the statistical tests"
    )


@pytest.fixture(scope='class', autouse=True)
def config_variables(request):
    # Set as class attribute on the invoking test context.
    request.cls.seed_count = int(request.config.getoption("--seed_count"))
