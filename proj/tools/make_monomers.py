#!/usr/bin/env python3
# SPDX-License-Identifier: Apache-2.0
"""Writes data/monomers/*.json with RDKit geometries.

Epoxides are stored in their activated (ring-opened) form: the terminal
carbon is a [CH2] radical site and the neighboring hydroxyl is an
etherification site. Atom order matches the C++ SMILES reader: heavy atoms
in SMILES order, then hydrogens grouped by heavy atom.
"""
import json
import pathlib
import sys

from rdkit import Chem
from rdkit.Chem import AllChem

MONOMERS = {
    "DGEBA": "CC(C)(c1ccc(OCC(O)[CH2])cc1)c1ccc(OCC(O)[CH2])cc1",
    "TGDDM": "N(CC(O)[CH2])(CC(O)[CH2])c1ccc(Cc2ccc(N(CC(O)[CH2])CC(O)[CH2])cc2)cc1",
    "TMBP": "Cc1cc(-c2cc(C)c(OCC(O)[CH2])c(C)c2)cc(C)c1OCC(O)[CH2]",
    "TGPAP": "[CH2]C(O)COc1ccc(N(CC(O)[CH2])CC(O)[CH2])cc1",
    "DGEBF": "c1cc(OCC(O)[CH2])ccc1Cc1ccc(OCC(O)[CH2])cc1",
    "IPD": "CC1(C)CC(N)CC(C)(CN)C1",
    "TETA": "NCCNCCNCCN",
    "PDA": "Nc1ccc(N)cc1",
    "DDS": "Nc1ccc(S(=O)(=O)c2ccc(N)cc2)cc1",
    "TBPM": "C(c1ccc(Br)cc1)(c1ccc(Br)cc1)(c1ccc(Br)cc1)c1ccc(Br)cc1",
}


def sites(mol):
    out = []
    for atom in mol.GetAtoms():
        idx = atom.GetIdx()
        sym = atom.GetSymbol()
        if sym == "C" and atom.GetNumRadicalElectrons() == 1:
            out.append({"atom": idx, "type": "epoxy_c"})
        elif sym == "O" and atom.GetTotalNumHs() == 1:
            carbon = atom.GetNeighbors()[0]
            if any(n.GetNumRadicalElectrons() == 1 for n in carbon.GetNeighbors()):
                out.append({"atom": idx, "type": "hydroxyl"})
        elif sym == "N" and not atom.GetIsAromatic():
            if atom.GetTotalNumHs() == 2:
                out.append({"atom": idx, "type": "amine_n1"})
            elif atom.GetTotalNumHs() == 1:
                out.append({"atom": idx, "type": "amine_n2"})
        elif sym == "C" and atom.GetIsAromatic() and any(n.GetSymbol() == "Br" for n in atom.GetNeighbors()):
            out.append({"atom": idx, "type": "aryl_br"})
    return out


def geometry(mol):
    molh = Chem.AddHs(mol)
    params = AllChem.ETKDGv3()
    params.randomSeed = 20240611
    if AllChem.EmbedMolecule(molh, params) != 0:
        raise RuntimeError("embedding failed")
    if AllChem.MMFFHasAllMoleculeParams(molh):
        AllChem.MMFFOptimizeMolecule(molh, maxIters=2000)
    else:
        AllChem.UFFOptimizeMolecule(molh, maxIters=2000)
    conf = molh.GetConformer()
    return [[round(c, 6) for c in conf.GetAtomPosition(i)] for i in range(molh.GetNumAtoms())]


def main(out_dir):
    out_dir = pathlib.Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, smiles in MONOMERS.items():
        mol = Chem.MolFromSmiles(smiles)
        doc = {
            "schema_version": 1,
            "name": name,
            "smiles": smiles,
            "reaction_sites": sites(mol),
            "geometry": geometry(mol),
        }
        (out_dir / f"{name.lower()}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print(name, Chem.AddHs(mol).GetNumAtoms(), "atoms", len(doc["reaction_sites"]), "sites")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/monomers")
