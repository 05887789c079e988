"""
Signaux pour maintenir les champs dérivés des rapports
"""

import logging

from django.db.models.signals import post_save, pre_save
from django.dispatch import receiver

from .audit import AuditLogger
from .models import RapportExperience


logger = logging.getLogger('experiences')


@receiver(pre_save, sender=RapportExperience)
def calculer_statut_rapport(sender, instance, **kwargs):
    """
    Dérive le statut global et le nombre de contrôles
    """
    instance.nombre_verifications = len(instance.verifications or [])
    instance.succes = instance.tous_controles_passent()


@receiver(post_save, sender=RapportExperience)
def tracer_enregistrement_rapport(sender, instance, created, **kwargs):
    """
    Trace chaque rapport enregistré dans le journal d'audit
    """
    if created:
        logger.debug("Rapport %s enregistré", instance.pk)
        AuditLogger.log_enregistrement(instance)
