from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='RapportExperience',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('experience', models.CharField(db_index=True, max_length=50, verbose_name='Expérience')),
                ('parametres', models.JSONField(default=dict, verbose_name='Paramètres')),
                ('graine', models.DecimalField(decimal_places=0, max_digits=20, verbose_name='Graine')),
                ('resultats', models.JSONField(default=dict, verbose_name='Résultats')),
                ('verifications', models.JSONField(default=list, verbose_name='Contrôles')),
                ('succes', models.BooleanField(default=False, verbose_name='Tous les contrôles passent')),
                ('nombre_verifications', models.PositiveIntegerField(default=0, verbose_name='Nombre de contrôles')),
                ('date_creation', models.DateTimeField(auto_now_add=True, verbose_name='Date de création')),
            ],
            options={
                'verbose_name': "Rapport d'expérience",
                'verbose_name_plural': "Rapports d'expérience",
                'ordering': ['-date_creation'],
            },
        ),
    ]
