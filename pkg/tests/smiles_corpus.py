"""Test corpus: 200+ valid SMILES covering the supported grammar.

Plain organics, aromatics and fused heterocycles, charged species,
multi-fragment salts, stereo markers (discarded on parse) and a few
metal-containing entries for the admission filter tests.
"""

CORPUS = [
    # alkanes / branched
    "CC", "CCC", "CCCC", "CCCCC", "CCCCCC", "CC(C)C", "CC(C)(C)C",
    "CCC(C)C", "CC(C)CC", "CCCC(C)C", "CC(C)C(C)C", "CCC(CC)CC",
    "CC(C)(C)CC", "CCCCCCCC", "CC(C)CC(C)(C)C",
    # alkenes / alkynes
    "C=C", "CC=C", "CC=CC", "C=CC=C", "CC(=C)C", "C#C", "CC#C", "CC#CC",
    "C=C(C)C", "CCC=CC", "C#CC#C", "C=C=C", "CC=C(C)C", "C/C=C/C",
    "C/C=C\\C",
    # alcohols / ethers
    "CO", "CCO", "CCCO", "CC(C)O", "CC(O)C", "OCCO", "OCC(O)CO",
    "COC", "CCOC", "CCOCC", "COCCOC", "CC(C)OC(C)C", "OCCOCCO",
    # aldehydes / ketones / acids / esters
    "C=O", "CC=O", "CCC=O", "CC(C)=O", "CCC(C)=O", "CC(=O)CC",
    "OC=O", "CC(=O)O", "CCC(=O)O", "CC(C)C(=O)O", "OC(=O)C(=O)O",
    "COC=O", "CC(=O)OC", "CC(=O)OCC", "CCOC(=O)C", "CC(=O)OC(C)C",
    "OC(=O)CC(=O)O", "OC(=O)CCC(=O)O", "OC(=O)CC(O)(CC(O)=O)C(O)=O",
    # amines / amides / nitriles / nitro-like
    "CN", "CCN", "CNC", "CN(C)C", "CCNCC", "NCCN", "NCCO", "CC(N)C",
    "NC=O", "CC(N)=O", "CNC(C)=O", "CC(=O)N(C)C", "NC(N)=O", "C#N",
    "CC#N", "CCC#N", "N#CC#N", "NCC(=O)O", "NC(C)C(=O)O", "NCCCC(N)C(=O)O",
    "CNC(=N)N",
    # sulfur / phosphorus
    "CS", "CCS", "CSC", "CSSC", "CS(=O)C", "CS(C)(=O)=O", "OS(=O)(=O)O",
    "CCS(=O)(=O)O", "S=C=S", "CSC#N", "OP(=O)(O)O", "CP(C)C", "COP(=O)(O)OC",
    # halogenated
    "CF", "CCl", "CBr", "CI", "CCF", "CCCl", "CCBr", "CCI", "FCF",
    "ClCCl", "ClC(Cl)Cl", "ClC(Cl)(Cl)Cl", "FC(F)F", "FC(F)(F)F",
    "CC(F)(F)F", "ClCCBr", "FCC(F)(F)F", "BrCCBr", "ClC(Cl)=C(Cl)Cl",
    "FC(F)=C(F)F",
    # carbocycles
    "C1CC1", "C1CCC1", "C1CCCC1", "C1CCCCC1", "C1CCCCCC1", "CC1CC1",
    "CC1CCC1", "CC1CCCCC1", "CC1CCC(C)CC1", "C1CC2CCC1CC2",
    "C1CCC2CCCCC2C1", "C1CC1C1CC1", "C1CCC(CC1)C1CCCCC1",
    "C1=CC1", "C1=CCCCC1", "C1=CCC=CC1", "C1=CC=CC1", "C1CCC=CC1",
    "O1CCCC1", "O1CCCCC1", "O1CCOCC1", "N1CCCC1", "N1CCCCC1",
    "N1CCOCC1", "N1CCNCC1", "S1CCCC1", "C1CC1C(=O)O", "OC1CCCCC1",
    "O=C1CCCCC1", "O=C1CCC(=O)CC1", "CC1=CC(=O)CC(C)(C)C1", "C1CC2(CC1)CCC2",
    # benzene derivatives
    "c1ccccc1", "Cc1ccccc1", "CCc1ccccc1", "Cc1ccccc1C", "Cc1ccc(C)cc1",
    "Cc1cccc(C)c1", "CC(C)c1ccccc1", "Oc1ccccc1", "COc1ccccc1",
    "Nc1ccccc1", "CNc1ccccc1", "Clc1ccccc1", "Fc1ccccc1", "Brc1ccccc1",
    "Ic1ccccc1", "Oc1ccc(O)cc1", "Nc1ccc(N)cc1", "Clc1ccc(Cl)cc1",
    "Cc1ccc(O)cc1", "Oc1ccc(Cl)cc1", "N#Cc1ccccc1", "O=Cc1ccccc1",
    "CC(=O)c1ccccc1", "OC(=O)c1ccccc1", "COC(=O)c1ccccc1",
    "NC(=O)c1ccccc1", "Nc1ccc(cc1)C(=O)O", "Oc1ccccc1C(=O)O",
    "CC(=O)Oc1ccccc1C(=O)O", "CC(=O)Nc1ccc(O)cc1", "Cc1ccccc1N",
    "c1ccc(-c2ccccc2)cc1", "c1ccc(Cc2ccccc2)cc1", "OCc1ccccc1",
    "NCc1ccccc1", "ClCc1ccccc1", "CC(C)(C)c1ccccc1", "C=Cc1ccccc1",
    "C#Cc1ccccc1", "FC(F)(F)c1ccccc1", "CSc1ccccc1", "CS(=O)(=O)c1ccccc1",
    # fused / polycyclic aromatics
    "c1ccc2ccccc2c1", "Cc1cccc2ccccc12", "c1ccc2cc3ccccc3cc2c1",
    "c1ccc2c(c1)ccc1ccccc12", "Oc1ccc2ccccc2c1", "c1ccc2c(c1)CCCC2",
    "C1Cc2ccccc2C1", "O=C1CCc2ccccc21",
    # heteroaromatics
    "c1ccncc1", "c1ccoc1", "c1ccsc1", "c1cc[nH]c1", "Cn1cccc1",
    "c1cncnc1", "c1cnccn1", "c1cnncn1", "Cc1ccncc1", "Cc1cccnc1",
    "Cc1ccco1", "Cc1cccs1", "Nc1ccncc1", "Oc1ccncc1", "c1ccc2[nH]ccc2c1",
    "c1ccc2occc2c1", "c1ccc2sccc2c1", "c1ccc2ncccc2c1", "c1ccc2ncncc2c1",
    "O=c1cccc[nH]1", "O=c1ccocc1", "Cc1nccs1", "Cc1ncco1", "c1cnc2[nH]ccc2c1",
    "c1cc2cccnc2cc1", "Cc1cc(C)nc(C)n1", "Nc1ncnc2[nH]cnc12",
    "Cn1cnc2c1c(=O)n(C)c(=O)n2C",
    # charged / salts / multi-fragment
    "[NH4+].[Cl-]", "[Na+].[Cl-]", "[K+].[Br-]", "[Na+].[O-]C(=O)C",
    "[Na+].[O-]c1ccccc1", "C[N+](C)(C)C.[Cl-]", "[O-]C(=O)C(=O)[O-].[Na+].[Na+]",
    "[NH3+]CC(=O)[O-]", "C[NH3+].[Cl-]", "O.O", "O.CCO", "[OH-].[Na+]",
    "[Ca+2].[Cl-].[Cl-]", "[Mg+2].[O-]S(=O)(=O)[O-]",
    # metals bonded (admit filter fodder)
    "C[Hg]C", "[Fe]", "O=[Si]=O",
    # ring closure variants
    "C%10CCCC%10", "C1CCCCC1C1CCCCC1", "C12(CCCCC1)CCCCC2",
    "C1(CC1)C1CC1", "c1ccc(cc1)-c1ccc(cc1)-c1ccccc1",
    # misc real molecules
    "CC(C)Cc1ccc(cc1)C(C)C(=O)O", "CC(=O)Nc1ccccc1", "OCC(O)C(O)C(O)C(O)CO",
    "NC(CO)C(=O)O", "CC(O)C(=O)O", "OCC1OC(O)C(O)C(O)C1O",
    "CN1CCC23c4c5ccc(O)c4OC2C(O)C=CC3C1C5", "CC(C)=CCCC(C)=CC=O",
    "Cc1ncc(CO)c(CO)c1O", "OC(=O)c1cccnc1", "NS(=O)(=O)c1ccc(N)cc1",
    "CC1(C)SC2C(NC(=O)Cc3ccccc3)C(=O)N2C1C(=O)O",
]

# Entries expected to FAIL admission (single heavy atom or metal without flag).
REJECT_SINGLE_HEAVY = ["C", "O", "N", "[Na+]", "S"]
REJECT_METAL = ["[Na+].[Cl-]", "C[Hg]C", "[Fe]", "[Ca+2].[Cl-].[Cl-]"]
