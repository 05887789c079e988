"""
Configuration de l'application des expériences
"""

from django.apps import AppConfig


class ExperiencesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'experiences'
    verbose_name = "Expériences du simulateur"

    def ready(self):
        """
        Point d'initialisation des signaux
        """
        import experiences.signals  # noqa: F401
