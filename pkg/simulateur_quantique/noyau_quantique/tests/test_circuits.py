"""
Tests de l'exécution des circuits, des oracles et du format texte
"""

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from noyau_quantique.circuits import (
    MAX_PERMUTATIONS_ORACLE,
    Circuit,
    ModeOracle,
    Oracle,
    circuit_adjoint,
    concatener,
    deserialiser,
    executer,
    executer_tirs,
    matrice_circuit,
    nombre_portes,
    remapper,
    serialiser,
)
from noyau_quantique.erreurs import (
    ErreurAnalyseCircuit,
    ErreurIndiceQubit,
    ErreurParametres,
    ErreurRegistres,
)
from noyau_quantique.essais import generateur
from noyau_quantique.etats import etat_base
from noyau_quantique.portes import (
    PORTE_CNOT,
    PORTE_H,
    PORTE_S,
    PORTE_T,
    PORTE_TDG,
    PORTE_TOFFOLI,
    PORTE_X,
    ApplicationPorte,
    decomposition_toffoli,
    porte_controlee,
    porte_personnalisee,
    porte_rk,
)


def _echange_par_cnot():
    return Circuit(2, [ApplicationPorte(PORTE_CNOT, c) for c in ((0, 1), (1, 0), (0, 1))], (0, 1))


etapes_aleatoires = st.lists(
    st.tuples(
        st.sampled_from([PORTE_H, PORTE_S, PORTE_T, PORTE_X, PORTE_CNOT, porte_rk(3)]),
        st.permutations([0, 1, 2]),
    ),
    max_size=12,
).map(lambda couples: [ApplicationPorte(p, tuple(q[:p.nombre_qubits])) for p, q in couples])


class ExecutionTests(SimpleTestCase):
    """Tests d'exécution des circuits"""

    def setUp(self):
        self.rng = generateur(42)

    def test_echange_par_trois_cnot(self):
        resultat = executer(_echange_par_cnot(), initial=etat_base('01'), rng=self.rng)
        self.assertEqual(resultat.bits, '10')

    def test_nand_par_toffoli(self):
        circuit = Circuit(3, [ApplicationPorte(PORTE_TOFFOLI, (0, 1, 2))], (2,))
        for entree, attendu in (('00', '1'), ('01', '1'), ('10', '1'), ('11', '0')):
            resultat = executer(circuit, initial=etat_base(entree + '1'), rng=self.rng)
            self.assertEqual(resultat.bits, attendu)

    def test_mesure_sans_generateur(self):
        with self.assertRaises(ErreurParametres):
            executer(Circuit(1, [ApplicationPorte(PORTE_H, (0,))], (0,)))

    def test_indice_hors_registre(self):
        with self.assertRaises(ErreurIndiceQubit):
            Circuit(2, [ApplicationPorte(PORTE_H, (2,))])

    def test_tirs_reproductibles(self):
        circuit = Circuit(1, [ApplicationPorte(PORTE_H, (0,))], (0,))
        self.assertEqual(
            executer_tirs(circuit, 100, generateur(3)), executer_tirs(circuit, 100, generateur(3))
        )

    def test_nombre_portes(self):
        toffoli = Circuit(3, [ApplicationPorte(PORTE_TOFFOLI, (0, 1, 2))])
        self.assertEqual(nombre_portes(toffoli).nombre_portes_elementaires, 1)
        complexite = nombre_portes(toffoli, base_elementaire=True)
        self.assertEqual(complexite.nombre_portes_elementaires, 16)
        self.assertEqual(
            nombre_portes(concatener(toffoli, toffoli)),
            nombre_portes(toffoli) + nombre_portes(toffoli),
        )

    def test_remapper(self):
        circuit = remapper(Circuit(1, [ApplicationPorte(PORTE_X, (0,))]), (2,), 3)
        self.assertTrue(executer(circuit).etat_final.proche(etat_base('001')))

    @settings(deadline=None, max_examples=40)
    @given(etapes_aleatoires)
    def test_reversibilite(self, etapes):
        """Un circuit suivi de son adjoint est l'identité"""
        circuit = Circuit(3, etapes)
        matrice = matrice_circuit(concatener(circuit, circuit_adjoint(circuit)))
        np.testing.assert_allclose(matrice, np.eye(8), atol=1e-12)


class OracleTests(SimpleTestCase):
    """Tests des oracles comptés"""

    def test_xor(self):
        oracle = Oracle(2, 1, lambda x: int(x == 2))
        resultat = oracle.appliquer(etat_base('100'), (0, 1), (2,))
        self.assertTrue(resultat.proche(etat_base('101')))
        self.assertEqual(oracle.compteur_requetes, 1)

    def test_xor_involutif(self):
        oracle = Oracle(2, 2, lambda x: (3 * x) % 4)
        etat = etat_base('1101')
        deux_fois = oracle.appliquer(oracle.appliquer(etat, (0, 1), (2, 3)), (0, 1), (2, 3))
        self.assertTrue(deux_fois.proche(etat))
        self.assertEqual(oracle.compteur_requetes, 2)

    def test_addition(self):
        """y + f(x) mod 2^m"""
        oracle = Oracle(1, 2, lambda x: 3, ModeOracle.ADDITION)
        resultat = oracle.appliquer(etat_base('110'), (0,), (1, 2))
        self.assertTrue(resultat.proche(etat_base('101')))

    def test_registres_chevauchants(self):
        oracle = Oracle(1, 1, lambda x: x)
        with self.assertRaises(ErreurRegistres):
            oracle.appliquer(etat_base('00'), (0,), (0,))

    def test_valeurs_hors_sortie(self):
        oracle = Oracle(1, 1, lambda x: 2)
        with self.assertRaises(ErreurParametres):
            oracle.appliquer(etat_base('00'), (0,), (1,))

    def test_cache_des_permutations_borne(self):
        """Le cache garde au plus MAX_PERMUTATIONS_ORACLE dispositions de registres"""
        oracle = Oracle(1, 1, lambda x: x)
        for n in range(2, 9):
            entree = etat_base('1' + '0' * (n - 1))
            resultat = oracle.appliquer(entree, (0,), (n - 1,))
            self.assertTrue(resultat.proche(etat_base('1' + '0' * (n - 2) + '1')))
            self.assertLessEqual(len(oracle._permutations), MAX_PERMUTATIONS_ORACLE)
        self.assertEqual(oracle.compteur_requetes, 7)

    def test_matrice_permutation(self):
        oracle = Oracle(1, 1, lambda x: x)
        np.testing.assert_array_equal(
            oracle.matrice_permutation(),
            np.real(matrice_circuit(Circuit(2, [ApplicationPorte(PORTE_CNOT, (0, 1))]))),
        )
        self.assertEqual(oracle.compteur_requetes, 0)


class FormatTexteTests(SimpleTestCase):
    """Tests de sérialisation des circuits"""

    def test_texte(self):
        self.assertEqual(
            serialiser(_echange_par_cnot()), "QUBITS 2\nCNOT 0 1\nCNOT 1 0\nCNOT 0 1\nMEASURE 0 1\n"
        )

    def test_aller_retour(self):
        circuit = Circuit(
            3,
            decomposition_toffoli() + [
                ApplicationPorte(porte_controlee(porte_rk(3)), (2, 0)),
                ApplicationPorte(porte_rk(4, dague=True), (1,)),
                ApplicationPorte(PORTE_TDG, (0,)),
            ],
            (2, 0),
        )
        self.assertEqual(deserialiser(serialiser(circuit)), circuit)

    def test_commentaires_et_lignes_vides(self):
        circuit = deserialiser("# échange\nQUBITS 1\n\nH 0\n")
        self.assertEqual(circuit.etapes, (ApplicationPorte(PORTE_H, (0,)),))
        self.assertIsNone(circuit.mesure_finale)

    def test_porte_inconnue(self):
        with self.assertRaises(ErreurAnalyseCircuit) as contexte:
            deserialiser("QUBITS 2\nH 0\nFOO 1\n")
        self.assertEqual(contexte.exception.numero_ligne, 3)
        self.assertEqual(contexte.exception.jeton, 'FOO')

    def test_qubit_hors_registre(self):
        with self.assertRaises(ErreurAnalyseCircuit) as contexte:
            deserialiser("QUBITS 2\nH 2\n")
        self.assertEqual(contexte.exception.numero_ligne, 2)
        self.assertEqual(contexte.exception.jeton, '2')

    def test_chiffres_non_ascii(self):
        """Les chiffres Unicode sont refusés par l'analyseur, pas par int()"""
        cas = [("QUBITS 2\nH \u00b2\n", '\u00b2'), ("QUBITS \u0663\nH 0\n", '\u0663')]
        for texte, jeton in cas:
            with self.subTest(jeton=jeton):
                with self.assertRaises(ErreurAnalyseCircuit) as contexte:
                    deserialiser(texte)
                self.assertEqual(contexte.exception.jeton, jeton)

    def test_mesure_en_dernier(self):
        with self.assertRaises(ErreurAnalyseCircuit):
            deserialiser("QUBITS 1\nMEASURE 0\nH 0\n")

    def test_porte_personnalisee_non_serialisable(self):
        circuit = Circuit(1, [ApplicationPorte(porte_personnalisee(np.eye(2)), (0,))])
        with self.assertRaises(ErreurAnalyseCircuit):
            serialiser(circuit)
