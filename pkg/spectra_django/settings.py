"""
Django settings for the spectra_django project.

The project only hosts the graph_spectra toolkit: there is no web surface and
no database, so the settings reduce to the installed apps, logging and the
SPECTRA dictionary read by graph_spectra.conf.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Only used by Django internals (signing); commands never serve requests.
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'spectra-local-only-key')

DEBUG = os.getenv('DJANGO_DEBUG', 'False') == 'True'

ALLOWED_HOSTS = []

INSTALLED_APPS = [
    'rest_framework',
    'graph_spectra',
]

# No database: every test is a SimpleTestCase and reports go to files.
DATABASES = {}

REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': True,
}

# Toolkit configuration. Command flags override these per run.
SPECTRA = {
    'VERTEX_CAP': 64,
    'GRAPH6_MAX_ORDER': 62,
    'CONNECTED_MAX_N': 8,
    'CONNECTED_OPT_IN_MAX_N': 9,
    'TREES_MAX_N': 12,
    'CATERPILLAR_MAX_N': 12,
    'BRIDGE_TRIALS': 200,
    'HUB_POSITIVES': 50,
    'STAR_HUB_POSITIVES': 20,
    'SEED': 0,
    'WORKERS': 1,
    'REPORT_PATH': BASE_DIR / 'verification_report.json',
}

LOG_LEVEL = os.getenv('SPECTRA_LOG_LEVEL', 'INFO')

LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{asctime} {levelname} {name}: {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'graph_spectra': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'django': {
            'handlers': ['console'],
            'level': 'WARNING',
        },
    },
}

# Internationalization
LANGUAGE_CODE = 'en-us'
TIME_ZONE = 'UTC'
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'
