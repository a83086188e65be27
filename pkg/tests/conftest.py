import random

import pytest

from pqcert.x509 import DistinguishedName

CASE_STUDY_SUBJECT = "C=TW,O=Example Telecom Co.,OU=Information Security Laboratory,L=Taipei,CN=Example Root CA"


@pytest.fixture
def rng():
    return random.Random(20240216)


@pytest.fixture
def root_subject():
    return DistinguishedName.parse(CASE_STUDY_SUBJECT)
