"""
Modèles de données des rapports d'expérience
"""

from django.db import models


class RapportExperience(models.Model):
    """
    Rapport d'une exécution : paramètres, graine, résultats et contrôles

    Les contrôles sont une liste de dictionnaires
    {'nom', 'attendu', 'observe', 'succes'}.
    """

    experience = models.CharField(max_length=50, verbose_name="Expérience", db_index=True)
    parametres = models.JSONField(default=dict, verbose_name="Paramètres")
    # Graines jusqu'à 2^64 - 1 : au-delà de BigIntegerField
    graine = models.DecimalField(max_digits=20, decimal_places=0, verbose_name="Graine")
    resultats = models.JSONField(default=dict, verbose_name="Résultats")
    verifications = models.JSONField(default=list, verbose_name="Contrôles")

    # Champs dérivés (signal pre_save)
    succes = models.BooleanField(default=False, verbose_name="Tous les contrôles passent")
    nombre_verifications = models.PositiveIntegerField(default=0, verbose_name="Nombre de contrôles")

    date_creation = models.DateTimeField(auto_now_add=True, verbose_name="Date de création")

    class Meta:
        verbose_name = "Rapport d'expérience"
        verbose_name_plural = "Rapports d'expérience"
        ordering = ['-date_creation']

    def __str__(self):
        statut = "succès" if self.tous_controles_passent() else "échec"
        return f"{self.experience} (graine {self.graine}) : {statut}"

    def tous_controles_passent(self):
        return all(v.get('succes', False) for v in self.verifications)

    def controles_en_echec(self):
        """Noms des contrôles en échec, dans l'ordre du rapport"""
        return [v['nom'] for v in self.verifications if not v.get('succes', False)]

    @classmethod
    def depuis_rapport(cls, rapport):
        """Instance non enregistrée à partir du dictionnaire du gestionnaire"""
        return cls(
            experience=rapport['experience'],
            parametres=rapport['parametres'],
            graine=rapport['graine'],
            resultats=rapport['resultats'],
            verifications=rapport['verifications'],
        )
