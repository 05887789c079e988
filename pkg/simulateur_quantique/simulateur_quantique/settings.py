"""
Configuration du simulateur quantique et de ses expériences
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# Charger les variables d'environnement
load_dotenv()

# Construction des chemins
BASE_DIR = Path(__file__).resolve().parent.parent

# Sécurité
SECRET_KEY = os.getenv('DJANGO_SECRET_KEY', 'dev-secret-key-change-in-production')
DEBUG = os.getenv('DJANGO_DEBUG', 'True') == 'True'
ALLOWED_HOSTS = os.getenv('DJANGO_ALLOWED_HOSTS', 'localhost,127.0.0.1').split(',')

# Applications installées
INSTALLED_APPS = [
    'django.contrib.auth',
    'django.contrib.contenttypes',

    # Applications tierces
    'rest_framework',

    # Applications locales
    'experiences',
]

# Base de données (SQLite par défaut, PostgreSQL via DB_ENGINE)
DB_ENGINE = os.getenv('DB_ENGINE', 'django.db.backends.sqlite3')

if DB_ENGINE == 'django.db.backends.sqlite3':
    DATABASES = {
        'default': {
            'ENGINE': DB_ENGINE,
            'NAME': os.getenv('DB_NAME', str(BASE_DIR / 'db.sqlite3')),
        }
    }
else:
    DATABASES = {
        'default': {
            'ENGINE': DB_ENGINE,
            'NAME': os.getenv('DB_NAME', 'simulateur_quantique_db'),
            'USER': os.getenv('DB_USER', 'postgres'),
            'PASSWORD': os.getenv('DB_PASSWORD', ''),
            'HOST': os.getenv('DB_HOST', 'localhost'),
            'PORT': os.getenv('DB_PORT', '5432'),
        }
    }

# Internationalisation
LANGUAGE_CODE = 'fr-fr'
TIME_ZONE = 'Europe/Paris'
USE_I18N = True
USE_TZ = True

# Type de champ par défaut
DEFAULT_AUTO_FIELD = 'django.db.models.BigAutoField'

# Django REST Framework (sérialisation des rapports uniquement)
REST_FRAMEWORK = {
    'UNAUTHENTICATED_USER': None,
    'COERCE_DECIMAL_TO_STRING': False,
}

# Simulateur
SIMULATEUR_MAX_QUBITS = int(os.getenv('SIMULATEUR_MAX_QUBITS', '24'))
SIMULATEUR_NOMBRE_TRAVAUX = int(os.getenv('SIMULATEUR_NOMBRE_TRAVAUX', '1'))
SIMULATEUR_ESSAIS_PAR_DEFAUT = int(os.getenv('SIMULATEUR_ESSAIS_PAR_DEFAUT', '10000'))
SIMULATEUR_GRAINE_PAR_DEFAUT = int(os.getenv('SIMULATEUR_GRAINE_PAR_DEFAUT', '0'))
SIMULATEUR_DOSSIER_DONNEES = os.getenv('SIMULATEUR_DOSSIER_DONNEES', str(BASE_DIR / 'donnees'))
SIMULATEUR_DOSSIER_LOGS = os.getenv('SIMULATEUR_DOSSIER_LOGS', str(BASE_DIR / 'logs'))

# Journalisation
from .logging_config import construire_logging  # noqa: E402

LOGGING = construire_logging(SIMULATEUR_DOSSIER_LOGS)
