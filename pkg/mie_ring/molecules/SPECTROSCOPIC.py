SPECTROSCOPIC_csv: str = """name,De_eV,re_angstrom,mu_amu
ScH,2.25,1.776,0.986040
CrH,2.13,1.694,0.988976
VH,2.33,1.719,0.988005
TiH,2.05,1.781,0.987371
MnH,1.67,1.753,0.989984
TiC,2.66,1.790,9.606079
NiC,2.76,1.621,9.974265
ScN,4.56,1.768,10.682771
ScF,5.85,1.794,13.358942
CuLi,1.74,2.310,6.259494
"""
