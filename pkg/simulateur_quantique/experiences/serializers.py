"""
Serializers Django REST Framework pour les rapports d'expérience
"""

from rest_framework import serializers

from .models import RapportExperience


class VerificationSerializer(serializers.Serializer):
    """
    Un contrôle du rapport, sous ses noms publics
    """

    name = serializers.CharField(source='nom')
    expected = serializers.JSONField(source='attendu', allow_null=True)
    observed = serializers.JSONField(source='observe', allow_null=True)

    def to_representation(self, instance):
        representation = super().to_representation(instance)
        # 'pass' est un mot réservé : le champ est ajouté à la main
        representation['pass'] = bool(instance['succes'])
        return representation


class RapportExperienceSerializer(serializers.ModelSerializer):
    """
    Serializer pour le modèle RapportExperience, au format public
    {experiment, params, seed, results, checks}
    """

    experiment = serializers.CharField(source='experience')
    params = serializers.JSONField(source='parametres')
    seed = serializers.IntegerField(source='graine')
    results = serializers.JSONField(source='resultats')
    checks = VerificationSerializer(source='verifications', many=True)

    class Meta:
        model = RapportExperience
        fields = ['experiment', 'params', 'seed', 'results', 'checks']


def aplatir_rapport(donnees):
    """
    Triplets (section, cle, valeur) triés, pour la sortie CSV

    Les dictionnaires imbriqués sont aplatis avec des clés pointées.
    """
    lignes = []

    def parcourir(section, prefixe, valeur):
        if isinstance(valeur, dict):
            for cle, sous_valeur in valeur.items():
                parcourir(section, f"{prefixe}.{cle}" if prefixe else str(cle), sous_valeur)
        else:
            lignes.append((section, prefixe, valeur))

    parcourir('experiment', '', donnees['experiment'])
    parcourir('seed', '', donnees['seed'])
    parcourir('params', '', donnees['params'])
    parcourir('results', '', donnees['results'])
    for controle in donnees['checks']:
        for cle in ('expected', 'observed', 'pass'):
            lignes.append(('checks', f"{controle['name']}.{cle}", controle[cle]))
    return sorted(lignes, key=lambda ligne: (ligne[0], ligne[1]))
