"""
Django settings for the multicrit project.

The project has no web surface: it is driven through management commands
(`python manage.py solve ...`) and the test runner. Every tunable is read with
python-decouple, so it can be overridden from the environment or a .env file.
"""

from pathlib import Path
from decouple import config, Csv

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent


# No sessions or signed cookies are served; the default only keeps Django happy
SECRET_KEY = config('SECRET_KEY', default='multicrit-insecure-development-key')

DEBUG = config('DEBUG', default=False, cast=bool)

ALLOWED_HOSTS = []


# Application definition

INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Third party apps
    'rest_framework',

    # Local apps
    'apps.games',
    'apps.solvers',
    'apps.axioms',
]


# Internationalization
# https://docs.djangoproject.com/en/4.2/topics/i18n/

LANGUAGE_CODE = 'es-es'

TIME_ZONE = 'Europe/Madrid'

USE_I18N = True

USE_TZ = True

# Default primary key field type
# https://docs.djangoproject.com/en/4.2/ref/settings/#default-auto-field

DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework (serializers and the JSON renderer only)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'DEFAULT_RENDERER_CLASSES': [
        'rest_framework.renderers.JSONRenderer',
    ],
}

# Game solvers
GAME_SIZE_CAP = config('GAME_SIZE_CAP', default=10 ** 6, cast=int)  # max product of column counts
GAME_TIE_CAP = config('GAME_TIE_CAP', default=256, cast=int)  # optimal vertices per LP
GAME_TIE_PIVOT_LIMIT = config('GAME_TIE_PIVOT_LIMIT', default=4096, cast=int)
GAME_WEIGHT_GRID = config('GAME_WEIGHT_GRID', default=0, cast=int)  # 0 = per-k default
GAME_ORACLE_X_GRID = config('GAME_ORACLE_X_GRID', default=50, cast=int)
GAME_ORACLE_Y_GRID = config('GAME_ORACLE_Y_GRID', default=40, cast=int)
GAME_AXIOM_SEARCH_GRIDS = config('GAME_AXIOM_SEARCH_GRIDS', default='4,8,16,32', cast=Csv(int))

LOG_LEVEL = config('LOG_LEVEL', default='INFO')

# Logging Configuration
LOGGING = {
    'version': 1,
    'disable_existing_loggers': False,
    'formatters': {
        'verbose': {
            'format': '{levelname} {asctime} {module} {message}',
            'style': '{',
        },
        'simple': {
            'format': '{levelname} {message}',
            'style': '{',
        },
    },
    'handlers': {
        'console': {
            # stderr, so structured output on stdout stays clean
            'class': 'logging.StreamHandler',
            'formatter': 'verbose',
        },
    },
    'loggers': {
        'apps.games': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'apps.solvers': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
        'apps.axioms': {
            'handlers': ['console'],
            'level': LOG_LEVEL,
            'propagate': False,
        },
    },
    'root': {
        'handlers': ['console'],
        'level': 'WARNING',
    },
}
