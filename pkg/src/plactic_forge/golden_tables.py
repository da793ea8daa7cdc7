"""Printed n=4 tables, transcribed as chains of equal expressions.

References: S[code] S@perm Schubert, Gm[code] (-beta)-Grothendieck,
K/Kh key and reduced key, G/H Grothendieck and dual at beta=1,
KG/KGh key-Grothendieck at beta=1, KT{w} GK{w} LK{w} U{w} kernel
coefficients indexed by tableau words.
"""

SCHUBERT_GROTHENDIECK = [
    ['S@1234', 'S[0]', '1', 'Gm[0]'],
    ['S@2134', 'S[1]', 'x1', 'Gm[1]'],
    ['S@1324', 'S[01]', 'x1 + x2', 'Gm[01] + beta * Gm[11]'],
    ['S@1243', 'S[001]', 'x1 + x2 + x3', 'Gm[001] + beta * Gm[011] + beta^2 * Gm[111]'],
    ['S@3124', 'S[2]', 'x1^2', 'Gm[2]'],
    ['S@2314', 'S[11]', 'x1 * x2', 'Gm[11]'],
    ['S@2143', 'S[101]', 'x1^2 + x1 * x2 + x1 * x3', 'Gm[101] + beta * Gm[201] + beta^2 * Gm[111]'],
    ['S@1342', 'S[011]', 'x1 * x2 + x1 * x3 + x2 * x3', 'Gm[011] + 2 * beta * Gm[111]'],
    ['S@1423', 'S[02]', 'x1^2 + x1 * x2 + x2^2', 'Gm[02] + beta * Gm[12] + beta^2 * Gm[22]'],
    ['S@4123', 'S[3]', 'x1^3', 'Gm[3]'],
    ['S@3214', 'S[21]', 'x1^2 * x2', 'Gm[21]'],
    ['S@2341', 'S[111]', 'x1 * x2 * x3', 'Gm[111]'],
    ['S@2413', 'S[12]', 'x1^2 * x2 + x1 * x2^2', 'Gm[12] + beta * Gm[22]'],
    ['S@1432', 'S[021]', 'x1^2 * x2 + x1^2 * x3 + x1 * x2^2 + x2^2 * x3 + x1 * x2 * x3', 'Gm[021] + 2 * beta * Gm[121] + beta * Gm[22] + beta^2 * Gm[221]'],
    ['S@3142', 'S[201]', 'x1^2 * x2 + x1^2 * x3', 'Gm[201] + beta * Gm[211]'],
    ['S@4213', 'S[31]', 'x1^3 * x2', 'Gm[31]'],
    ['S@3412', 'S[22]', 'x1^2 * x2^2', 'Gm[22]'],
    ['S@4132', 'S[301]', 'x1^3 * x2 + x1^3 * x3', 'Gm[301] + beta * Gm[311]'],
    ['S@3241', 'S[211]', 'x1^2 * x2 * x3', 'Gm[211]'],
    ['S@2431', 'S[121]', 'x1^2 * x2 * x3 + x1 * x2^2 * x3', 'Gm[121] + beta * Gm[221]'],
    ['S@4312', 'S[32]', 'x1^3 * x2^2', 'Gm[32]'],
    ['S@4231', 'S[311]', 'x1^3 * x2 * x3', 'Gm[311]'],
    ['S@3421', 'S[221]', 'x1^2 * x2^2 * x3', 'Gm[211]'],
    ['S@4321', 'S[321]', 'x1^3 * x2^2 * x3', 'Gm[321]'],
]

KEY = [
    ['K[0]', '1', 'Kh[0]'],
    ['K[1]', 'x1', 'Kh[1]'],
    ['K[01]', 'x1 + x2'],
    ['Kh[01]', 'x2'],
    ['K[001]', 'x1 + x2 + x3'],
    ['Kh[001]', 'x3'],
    ['K[2]', 'x1^2', 'Kh[2]'],
    ['K[11]', 'x1 * x2', 'Kh[11]'],
    ['K[101]', 'x1 * x2 + x1 * x3'],
    ['Kh[101]', 'x1 * x3'],
    ['K[02]', 'x1^2 + x1 * x2 + x2^2'],
    ['Kh[02]', 'x1 * x2 + x2^2'],
    ['K[011]', 'x1 * x2 + x1 * x3 + x2 * x3'],
    ['Kh[011]', 'x2 * x3'],
    ['K[3]', 'x1^3', 'Kh[3]'],
    ['K[21]', 'x1^2 * x2', 'Kh[21]'],
    ['K[111]', 'x1 * x2 * x3', 'Kh[111]'],
    ['K[12]', 'x1^2 * x2 + x1 * x2^2'],
    ['Kh[12]', 'x1 * x2^2'],
    ['K[021]', 'x1^2 * x2 + x1^2 * x3 + x1 * x2^2 + x2^2 * x3 + x1 * x2 * x3'],
    ['Kh[021]', 'x1 * x2 * x3 + x2^2 * x3'],
    ['K[201]', 'x1^2 * x2 + x1^2 * x3'],
    ['Kh[201]', 'x1^2 * x3'],
    ['K[31]', 'x1^3 * x2', 'Kh[31]'],
    ['K[22]', 'x1^2 * x2^2', 'Kh[22]'],
    ['K[211]', 'x1^2 * x2 * x3', 'Kh[211]'],
    ['K[301]', 'x1^3 * x2 + x1^3 * x3'],
    ['Kh[301]', 'x1^3 * x3'],
    ['K[121]', 'x1^2 * x2 * x3 + x1 * x2^2 * x3'],
    ['Kh[121]', 'x1 * x2^2 * x3'],
    ['K[32]', 'x1^3 * x2^2', 'Kh[32]'],
    ['K[311]', 'x1^3 * x2 * x3', 'Kh[311]'],
    ['K[221]', 'x1^2 * x2^2 * x3', 'Kh[221]'],
    ['K[321]', 'x1^3 * x2^2 * x3', 'Kh[321]'],
]

GROTHENDIECK_DUAL = [
    ['G@1234', 'G[0]', '1', 'S[0]'],
    ['H[0]', '( 1 + x1 )^3 * ( 1 + x2 )^2 * ( 1 + x3 )'],
    ['G@2134', 'G[1]', 'x1', 'S[1]'],
    ['H[1]', '( 1 + x1 )^2 * ( 1 + x2 )^2 * ( 1 + x3 ) * G[1]'],
    ['G@1324', 'G[01]', 'x1 + x2 + x1 * x2', 'S[01] + S[11]'],
    ['H[01]', '( 1 + x1 )^2 * ( 1 + x2 ) * ( 1 + x3 ) * G[01]'],
    ['G@1243', 'G[001]', 'x1 + x2 + x3 + x1 * x2 + x1 * x3 + x2 * x3 + x1 * x2 * x3', 'S[001] + S[011] + S[111]'],
    ['H[001]', '( 1 + x1 )^2 * ( 1 + x2 ) * G[001]'],
    ['G@3124', 'G[2]', 'x1^2', 'S[2]'],
    ['H[2]', '( 1 + x1 ) * ( 1 + x2 )^2 * ( 1 + x3 ) * G[2]'],
    ['G@2314', 'G[11]', 'x1 * x2', 'S[11]'],
    ['H[11]', '( 1 + x1 )^2 * ( 1 + x2 ) * ( 1 + x3 ) * G[11]'],
    ['G@2143', 'G[101]', 'x1^2 + x1 * x2 + x1 * x3 + x1^2 * x2 + x1^2 * x3 + x1 * x2 * x3 + x1^2 * x2 * x3', 'S[101] + S[201] + S[111] + S[211]'],
    ['H[101]', '( 1 + x1 ) * ( 1 + x2 ) * G[101]'],
    ['G@1342', 'G[011]', 'x1 * x2 + x1 * x3 + x2 * x3 + 2 * x1 * x2 * x3', 'S[011] + 2 * S[111]'],
    ['H[011]', '( 1 + x1 )^2 * ( 1 + x2 ) * ( x1 * x2 + x1 * x3 + x2 * x3 + x1 * x2 * x3 )'],
    ['G@1423', 'G[02]', 'x1^2 + x1 * x2 + x2^2 + x1^2 * x2 + x1 * x2^2', 'S[02] + S[12]'],
    ['H[02]', '( 1 + x1 ) * ( 1 + x3 ) * ( x1^2 + x1 * x2 + x2^2 + 2 * x1^2 * x2 + 2 * x1 * x2^2 + x1^2 * x2^2 )'],
    ['G@4123', 'G[3]', 'x1^3', 'S[3]'],
    ['H[3]', '( 1 + x1 )^2 * ( 1 + x3 ) * G[3]'],
    ['G@3214', 'G[21]', 'x1^2 * x2', 'S[21]'],
    ['H[21]', '( 1 + x1 ) * ( 1 + x2 ) * ( 1 + x3 ) * G[21]'],
    ['G@2341', 'G[111]', 'x1 * x2 * x3', 'S[111]'],
    ['H[111]', '( 1 + x1 )^2 * ( 1 + x2 ) * G[111]'],
    ['G@2413', 'G[12]', 'x1^2 * x2 + x1 * x2^2 + x1^2 * x2^2', 'S[12] + S[22]'],
    ['H[12]', '( 1 + x1 ) * ( 1 + x3 ) * G[12]'],
    ['G@1432', 'G[021]', 'x1^2 * x2 + x1^2 * x3 + x1 * x2^2 + x2^2 * x3 + x1 * x2 * x3 + 2 * x1 * x2 * x3 * ( x1 + x2 ) + x1^2 * x2^2 + x1^2 * x2^2 * x3', 'S[021] + 2 * S[121] + S[22] + S[211]'],
    ['H[021]', '( 1 + x1 ) * G[021]'],
    ['G@3142', 'G[201]', 'x1^2 * x2 + x1^2 * x3 + x1^2 * x2 * x3', 'S[201] + S[211]'],
    ['H[201]', '( 1 + x1 ) * ( 1 + x2 ) * G[201]'],
    ['G@4213', 'G[31]', 'x1^3 * x2', 'S[31]'],
    ['H[31]', '( 1 + x2 ) * ( 1 + x3 ) * G[31]'],
    ['G@3412', 'G[22]', 'x1^2 * x2^2', 'S[22]'],
    ['H[22]', '( 1 + x1 ) * ( 1 + x3 ) * G[22]'],
    ['G@4132', 'G[301]', 'x1^3 * x2 + x1^3 * x3 + x1^3 * x2 * x3', 'S[301] + S[311]'],
    ['H[301]', '( 1 + x2 ) * G[301]'],
    ['G@3241', 'G[211]', 'x1^2 * x2 * x3', 'S[211]'],
    ['H[211]', '( 1 + x2 ) * G[211]'],
    ['G@2431', 'G[121]', 'x1^2 * x2 * x3 + x1 * x2^2 * x3 + x1^2 * x2^2 * x3', 'S[121] + S[221]'],
    ['H[121]', '( 1 + x1 ) * ( 1 + x2 ) * G[121]'],
    ['G@4312', 'G[32]', 'x1^3 * x2^2', 'S[32]'],
    ['H[32]', '( 1 + x3 ) * G[32]'],
    ['G@4231', 'G[311]', 'x1^3 * x2 * x3', 'S[311]'],
    ['H[311]', '( 1 + x2 ) * G[311]'],
    ['G@3421', 'G[221]', 'x1^2 * x2^2 * x3', 'S[221]'],
    ['H[221]', '( 1 + x1 ) * G[221]'],
    ['G@4321', 'G[321]', 'x1^3 * x2^2 * x3', 'S[321]', 'H[321]'],
]

KEY_GROTHENDIECK = [
    ['KG[0]', '1', 'KGh[0]'],
    ['KG[1]', 'x1', 'KGh[1]'],
    ['KG[01]', 'x1 + x2 + x1 * x2'],
    ['KGh[01]', 'x2 + x1 * x2'],
    ['KG[001]', 'x1 + x2 + x3 + x1 * x2 + x1 * x3 + x2 * x3 + x1 * x2 * x3'],
    ['KGh[001]', 'x3 + x1 * x3 + x2 * x3 + x1 * x2 * x3'],
    ['KG[2]', 'x1^2', 'KGh[2]'],
    ['KG[11]', 'x1 * x2', 'KGh[11]'],
    ['KG[101]', 'x1 * x2 + x1 * x3 + x1 * x2 * x3'],
    ['KGh[101]', 'x1 * x3 + x1 * x2 * x3'],
    ['KG[02]', 'x1^2 + x1 * x2 + x2^2 + x1^2 * x2 + x1 * x2^2'],
    ['KGh[02]', 'x1 * x2 + x2^2 + x1^2 * x2 + x1 * x2^2'],
    ['KG[011]', 'x1 * x2 + x1 * x3 + x2 * x3 + 2 * x1 * x2 * x3'],
    ['KGh[011]', 'x2 * x3 + x1 * x2 * x3'],
    ['KG[3]', 'x1^3', 'KGh[3]'],
    ['KG[21]', 'x1^2 * x2', 'KGh[21]'],
    ['KG[111]', 'x1 * x2 * x3', 'KGh[111]'],
    ['KG[12]', 'x1^2 * x2 + x1 * x2^2 + x1^2 * x2^2'],
    ['KGh[12]', 'x1 * x2^2 + x1^2 * x2^2'],
    ['KG[201]', 'x1^2 * x2 + x1^2 * x3 + x1^2 * x2 * x3'],
    ['KGh[201]', 'x1^2 * x3 + x1^2 * x2 * x3'],
    ['KG[021]', 'x1^2 * x2 + x1^2 * x3 + x1 * x2^2 + x1 * x2 * x3 + x2^2 * x3 + 2 * x1^2 * x2 * x3 + 2 * x1 * x2^2 * x3 + x1^2 * x2^2 + x1^2 * x2^2 * x3'],
    ['KGh[021]', 'x1 * x2 * x3 + x2^2 * x3 + x1^2 * x2 * x3 + 2 * x1 * x2^2 * x3 + x1^2 * x2^2 * x3'],
    ['KG[31]', 'x1^3 * x2', 'KGh[31]'],
    ['KG[22]', 'x1^2 * x2^2', 'KGh[22]'],
    ['KG[211]', 'x1^2 * x2 * x3', 'KGh[211]'],
    ['KG[301]', 'x1^3 * x2 + x1^3 * x3 + x1^3 * x2 * x3'],
    ['KGh[301]', 'x1^3 * x3 + x1^3 * x2 * x3'],
    ['KG[121]', 'x1^2 * x2 * x3 + x1 * x2^2 * x3 + x1^2 * x2^2 * x3'],
    ['KGh[121]', 'x1 * x2^2 * x3 + x1^2 * x2^2 * x3'],
    ['KG[32]', 'x1^3 * x2^2', 'KGh[32]'],
    ['KG[311]', 'x1^3 * x2 * x3', 'KGh[311]'],
    ['KG[221]', 'x1^2 * x2^2 * x3', 'KGh[221]'],
    ['KG[321]', 'x1^3 * x2^2 * x3', 'KGh[321]'],
]

DOUBLE_KEY = [
    ['KT{}', '1'],
    ['KT{1}', 'p1_1'],
    ['KT{2}', 'p1_2 + p2_1'],
    ['KT{3}', 'p1_3 + p2_2 + p3_1'],
    ['KT{12}', 'p1_1 * p2_1'],
    ['KT{21}', 'p1_2 * p1_1'],
    ['KT{23}', 'p1_2 * p2_2 + p1_2 * p3_1 + p2_1 * p3_1'],
    ['KT{32}', 'p1_3 * p1_2 + p1_3 * p2_1 + p2_2 * p2_1'],
    ['KT{13}', 'p1_1 * p2_2 + p1_1 * p3_1'],
    ['KT{31}', 'p1_3 * p1_1'],
    ['KT{22}', 'p1_2 * p2_1'],
    ['KT{33}', 'p1_3 * p2_2 + p1_3 * p3_1 + p2_2 * p3_1'],
    ['KT{123}', 'p1_1 * p2_1 * p3_1'],
    ['KT{133}', 'p1_1 * p2_2 * p3_1'],
    ['KT{212}', 'p1_2 * p1_1 * p2_1'],
    ['KT{213}', 'p1_2 * p1_1 * p2_2 + p1_2 * p1_1 * p3_1'],
    ['KT{223}', 'p1_2 * p2_1 * p3_1'],
    ['KT{233}', 'p1_2 * p2_2 * p3_1'],
    ['KT{321}', 'p1_3 * p1_2 * p1_1'],
    ['KT{312}', 'p1_3 * p1_1 * p2_1 + q1_3^-1 * p1_1 * p2_2 * p2_1'],
    ['KT{313}', 'p1_3 * p1_1 * p2_2 + p1_3 * p1_1 * p3_1'],
    ['KT{322}', 'p1_3 * p1_2 * p2_1 + q2_3^-1 * p1_2 * p2_2 * p2_1'],
    ['KT{323}', 'p1_3 * p1_2 * p2_2 + p1_3 * p1_2 * p3_1 + p1_3 * p2_1 * p3_1 + p2_2 * p2_1 * p3_1 + q2_3 * p1_3 * p2_2 * p2_1'],
    ['KT{333}', 'p1_3 * p2_2 * p3_1'],
    ['KT{2123}', 'p1_2 * p1_1 * p2_1 * p3_1'],
    ['KT{2132}', 'p1_2 * p1_1 * p2_2 * p2_1'],
    ['KT{2133}', 'p1_2 * p1_1 * p2_2 * p3_1'],
    ['KT{3123}', 'p1_3 * p1_1 * p2_1 * p3_1 + q1_3^-1 * p1_1 * p2_2 * p2_1 * p3_1'],
    ['KT{3132}', 'p1_3 * p1_1 * p2_2 * p2_1'],
    ['KT{3133}', 'p1_3 * p1_2 * p2_2 * p3_1'],
    ['KT{3212}', 'p1_3 * p1_2 * p1_1 * p2_1'],
    ['KT{3213}', 'p1_3 * p1_2 * p1_1 * p2_2 + p1_3 * p1_2 * p1_1 * p3_1'],
    ['KT{3223}', 'p1_3 * p1_2 * p2_1 * p3_1 + q2_3^-1 * p1_2 * p2_2 * p2_1 * p3_1'],
    ['KT{3232}', 'p1_3 * p1_2 * p2_2 * p2_1'],
    ['KT{3233}', 'p1_3 * p1_2 * p2_2 * p3_1 + q2_3 * p1_3 * p2_2 * p2_1 * p3_1'],
    ['KT{21323}', 'p1_2 * p1_1 * p2_2 * p2_1 * p3_1'],
    ['KT{31323}', 'p1_3 * p1_1 * p2_2 * p2_1 * p3_1'],
    ['KT{32123}', 'p1_3 * p1_2 * p1_1 * p2_1 * p3_1'],
    ['KT{32132}', 'p1_3 * p1_2 * p1_1 * p2_2 * p2_1'],
    ['KT{32133}', 'p1_3 * p1_2 * p1_1 * p2_2 * p3_1'],
    ['KT{32323}', 'p1_3 * p1_2 * p2_2 * p2_1 * p3_1'],
    ['KT{321323}', 'p1_3 * p1_2 * p1_1 * p2_2 * p2_1 * p3_1'],
]

DOUBLE_KEY_GROTHENDIECK = [
    ['GK{}', '1'],
    ['GK{1}', 'p1_1', 'KT{1}'],
    ['GK{2}', 'p1_2 + p2_1 + p1_2 * p2_1', 'KT{2} + KT{22}'],
    ['GK{3}', 'p1_3 + p1_2 + p3_1 + p1_3 * p2_2 + p1_3 * p3_1 + p2_2 * p3_1 + p1_3 * p2_2 * p3_1', 'KT{3} + KT{33} + KT{333}'],
    ['GK{12}', 'p1_1 * p2_1', 'KT{12}'],
    ['GK{21}', 'p2_1 * p1_1', 'KT{21}'],
    ['GK{13}', 'p1_1 * p2_2 + p1_1 * p3_1 + p1_1 * p2_2 * p3_1', 'KT{13} + KT{133}'],
    ['GK{31}', 'p3_1 * p1_1', 'KT{31}'],
    ['GK{23}', 'p1_1 * p2_2 + p1_2 * p3_1 + p2_1 * p3_1 + p1_2 * p2_1 * p3_1 + p1_2 * p2_2 * p3_1', 'KT{23} + KT{223} + KT{233}'],
    ['GK{32}', 'p1_3 * p1_2 + p1_3 * p2_1 + p2_2 * p2_1 + p1_3 * p1_2 * p2_1 + p1_2 * p2_1 * p2_2', 'KT{32} + KT{322}'],
    ['GK{123}', 'p1_1 * p2_1 * p3_1', 'KT{123}'],
    ['GK{212}', 'p1_2 * p1_1 * p2_1', 'KT{212}'],
    ['GK{213}', 'p1_2 * p1_1 * p2_2 + p2_1 * p1_1 * p3_1 + p1_2 * p1_1 * p2_2 * p3_1', 'KT{213} + KT{2133}'],
    ['GK{312}', 'p1_3 * p1_1 * p2_1 + p1_1 * p2_2 * p2_1 + p1_2 * p1_1 * p2_2 * p2_1', 'KT{312} + KT{2132}'],
    ['GK{313}', 'p1_3 * p1_1 * p2_2 + p1_3 * p1_1 * p3_1 + p1_3 * p1_1 * p2_2 * p3_1', 'KT{313} + KT{3133}'],
    ['GK{321}', 'p1_1 * p1_2 * p1_3', 'KT{123}'],
    ['GK{323}', 'p1_3 * p1_2 * p2_2 + p1_3 * p1_2 * p3_1 + p1_3 * p2_1 * p3_1 + p2_2 * p2_1 * p3_1 + p1_3 * p2_2 * p2_1 + p1_3 * p1_2 * p2_1 * p2_2 + p1_2 * p2_1 * p2_2 * p3_1 + p1_3 * p1_2 * p2_2 * p3_1 + p1_3 * p1_2 * p2_1 * p3_1 + p1_2 * p2_2 * p2_1 * p3_1 + p1_3 * p1_2 * p2_2 * p2_1 * p3_1', 'KT{323} + KT{3232} + KT{3233} + KT{3223} + KT{32323}'],
    ['GK{2123}', 'p1_2 * p1_1 * p2_1 * p3_1', 'KT{2123}'],
    ['GK{2132}', 'p1_2 * p1_1 * p2_2 * p2_1', 'KT{2132}'],
    ['GK{3123}', 'p1_3 * p1_1 * p2_1 * p3_1 * p1_1 * p2_2 * p2_1 * p3_1 + p1_3 * p1_1 * p2_2 * p2_1 * p3_1', 'KT{3123} + KT{31323}'],
    ['GK{3212}', 'p1_3 * p1_2 * p1_1 * p2_1', 'KT{3212}'],
    ['GK{3213}', 'p1_3 * p1_2 * p1_1 * p2_2 + p1_3 * p1_2 * p1_1 * p3_1 + p1_3 * p1_2 * p1_1 * p2_2 * p3_1', 'KT{3213} + KT{32133}'],
    ['GK{21323}', 'p1_2 * p1_1 * p2_2 * p2_1 * p3_1', 'KT{21323}'],
    ['GK{32123}', 'p1_3 * p1_2 * p1_1 * p2_1 * p3_1', 'KT{32123}'],
    ['GK{32132}', 'p1_3 * p1_2 * p1_1 * p2_2 * p2_1', 'KT{32132}'],
    ['GK{321323}', 'p3_1 * p2_1 * p1_1 * p2_2 * p2_1 * p3_1', 'KT{321323}'],
]

LOCAL_KEY = [
    ['LK{}', '1'],
    ['LK{1}', 'KT{1}'],
    ['LK{2}', 'KT{2}'],
    ['LK{3}', 'KT{3}'],
    ['LK{12}', 'KT{12}'],
    ['LK{21}', 'KT{21} + KT{212}'],
    ['LK{13}', 'KT{13} + KT{31} + KT{313}'],
    ['LK{23}', 'KT{23}'],
    ['LK{32}', 'KT{32} + KT{323}'],
    ['LK{123}', 'KT{123}'],
    ['LK{213}', 'KT{213} + KT{2123}'],
    ['LK{312}', 'KT{312} + KT{3123}'],
    ['LK{321}', 'KT{321} + KT{3212} + KT{3213} + KT{32123} + KT{32132} + KT{321323}'],
    ['LK{2132}', 'KT{2132} + KT{21323}'],
]

RECTANGULAR_KEY = [
    ['U{}', '1'],
    ['U{1}', 'p1_1 + p2_3'],
    ['U{2}', 'p1_2 + p2_1'],
    ['U{3}', 'p1_3 + p2_2'],
    ['U{11}', 'p1_1 * p2_3'],
    ['U{12}', 'p1_1 * p2_1'],
    ['U{13}', 'p1_1 * p2_2'],
    ['U{21}', 'p1_2 * p1_1 + p1_2 * p2_3 + p2_1 * p2_3'],
    ['U{23}', 'p1_2 * p2_2'],
    ['U{22}', 'p1_2 * p2_1'],
    ['U{31}', 'p1_3 * p1_1 + p1_3 * p2_3 + p2_2 * p2_3'],
    ['U{32}', 'p1_3 * p1_2 + p1_3 * p2_1 + p2_2 * p2_1'],
    ['U{33}', 'p1_3 * p2_2'],
    ['U{211}', 'p1_2 * p1_1 * p2_3 + p1_1 * p2_1 * p2_3'],
    ['U{212}', 'p1_2 * p1_1 * p2_1 + p1_2 * p2_1 * p2_3'],
    ['U{213}', 'p1_2 * p1_1 * p2_2 + p1_2 * p2_2 * p2_3'],
    ['U{311}', 'p1_3 * p1_1 * p2_3 + p1_1 * p2_2 * p2_3'],
    ['U{312}', 'p1_3 * p1_1 * p2_1 + p1_1 * p2_2 * p2_1'],
    ['U{313}', 'p1_3 * p1_1 * p2_2 + p1_3 * p2_2 * p2_3'],
    ['U{321}', 'p1_3 * p1_2 * p1_1 + p1_3 * p1_2 * p2_3 + p1_3 * p2_1 * p2_3 + p2_2 * p2_1 * p2_3'],
    ['U{322}', 'p1_3 * p1_2 * p2_1 + p1_2 * p2_2 * p2_1'],
    ['U{323}', 'p1_3 * p1_2 * p2_2 + p1_3 * p2_2 * p2_1'],
    ['U{2121}', 'p1_2 * p1_1 * p2_1 * p2_3'],
    ['U{2131}', 'p1_2 * p1_1 * p2_2 * p2_3'],
    ['U{2132}', 'p1_2 * p1_1 * p2_2 * p2_3'],
    ['U{3132}', 'p1_3 * p1_1 * p2_2 * p2_3'],
    ['U{3131}', 'p1_3 * p1_1 * p2_2 * p2_3'],
    ['U{3232}', 'p1_3 * p2_1 * p2_2 * p2_3'],
    ['U{3211}', 'p1_3 * p1_2 * p1_1 * p2_3 + p1_3 * p1_1 * p2_1 * p2_3 + p1_1 * p2_2 * p2_1 * p2_3'],
    ['U{3212}', 'p1_3 * p1_2 * p1_1 * p2_2 + p1_3 * p1_2 * p2_1 * p2_3 + p1_2 * p2_1 * p2_2 * p2_3'],
    ['U{3213}', 'p1_3 * p1_2 * p1_1 * p2_1 + p1_3 * p2_2 * p2_1 * p2_3 + p1_2 * p2_2 * p2_1 * p2_3'],
    ['U{32121}', 'p1_2 * p1_1 * p2_2 * p2_1 * p2_3 + p1_3 * p1_2 * p1_1 * p2_1 * p2_3'],
    ['U{32131}', 'p1_3 * p1_2 * p1_1 * p2_2 * p2_3 + p1_3 * p1_1 * p2_2 * p2_1 * p2_3'],
    ['U{32132}', 'p1_3 * p1_2 * p1_1 * p2_2 * p2_1 + p1_3 * p1_2 * p2_2 * p2_1 * p2_3'],
    ['U{321321}', 'p1_3 * p1_2 * p1_1 * p2_2 * p2_1 * p2_3'],
]

# KN_w(x=1) by word, with the alpha=beta=1 total where printed
KN_AT_ONE = {
    '': ('1', None),
    '3': ('alpha*beta + beta + 1', None),
    '12': ('2*alpha^2*beta^2 + 3*alpha^2*beta + alpha*beta^2 + alpha^2 + 3*alpha*beta + 2*alpha + 1', 13),
    '21': ('alpha^2*beta^2 + 2*alpha^2*beta + alpha^2 + 3*alpha*beta + 3*alpha + beta + 2', 13),
    '13': ('alpha^2*beta^2 + 2*alpha^2*beta + alpha^2 + 2*alpha*beta + 2*alpha + 1', 9),
    '132': ('2*alpha^3*beta^3 + 5*alpha^3*beta^2 + alpha^2*beta^3 + 4*alpha^3*beta + 7*alpha^2*beta^2 + alpha^3 + 10*alpha^2*beta + 2*alpha*beta^2 + 4*alpha^2 + 7*alpha*beta + 5*alpha + beta + 2', 51),
    '121': ('alpha^3*beta^3 + 3*alpha^3*beta^2 + 3*alpha^3*beta + 4*alpha^2*beta^2 + alpha^3 + 7*alpha^2*beta + alpha*beta^2 + 3*alpha^2 + 4*alpha*beta + 3*alpha + 1', 31),
    '321': ('alpha^3*beta^3 + 3*alpha^3*beta^2 + 3*alpha^3*beta + 6*alpha^2*beta^2 + alpha^3 + 12*alpha^2*beta + 4*alpha*beta^2 + 6*alpha^2 + 14*alpha*beta + beta^2 + 10*alpha + 5*beta + 5', 71),
    '123': ('5*alpha^3*beta^3 + 10*alpha^3*beta^2 + 5*alpha^2*beta^3 + 6*alpha^3*beta + 14*alpha^2*beta^2 + alpha*beta^3 + alpha^3 + 12*alpha^2*beta + 4*alpha*beta^2 + 3*alpha^2 + 6*alpha*beta + 3*alpha + 1', None),
    '3121': ('alpha^4*beta^4 + 4*alpha^4*beta^3 + 6*alpha^4*beta^2 + 7*alpha^3*beta^3 + 4*alpha^4*beta + 20*alpha^3*beta^2 + 4*alpha^2*beta^3 + alpha^4 + 19*alpha^3*beta + 21*alpha^2*beta^2 + alpha*beta^3 + 6*alpha^3 + 29*alpha^2*beta + 7*alpha*beta^2 + 12*alpha^2 + 16*alpha*beta + 10*alpha + 2*beta + 3', 173),
    '1213': ('3*alpha^4*beta^4 + 10*alpha^4*beta^3 + 2*alpha^3*beta^4 + 12*alpha^4*beta^2 + 16*alpha^3*beta^3 + 6*alpha^4*beta + 29*alpha^3*beta^2 + 7*alpha^2*beta^3 + alpha^4 + 19*alpha^3*beta + 21*alpha^2*beta^2 + alpha*beta^3 + 4*alpha^3 + 20*alpha^2*beta + 4*alpha*beta^2 + 6*alpha^2 + 7*alpha*beta + 4*alpha + 1', 173),
    '2132': ('3*alpha^4*beta^4 + 9*alpha^4*beta^3 + 3*alpha^3*beta^4 + 10*alpha^4*beta^2 + 16*alpha^3*beta^3 + alpha^2*beta^4 + 5*alpha^4*beta + 28*alpha^3*beta^2 + 7*alpha^2*beta^3 + alpha^4 + 20*alpha^3*beta + 24*alpha^2*beta^2 + 5*alpha^3 + 28*alpha^2*beta + 7*alpha*beta^2 + 10*alpha^2 + 16*alpha*beta + beta^2 + 9*alpha + 3*beta + 3', 209),
    '21321': ('alpha^5*beta^5 + 5*alpha^5*beta^4 + 10*alpha^5*beta^3 + 9*alpha^4*beta^4 + 10*alpha^5*beta^2 + 32*alpha^4*beta^3 + 5*alpha^3*beta^4 + 5*alpha^5*beta + 43*alpha^4*beta^2 + 32*alpha^3*beta^3 + alpha^2*beta^4 + alpha^5 + 26*alpha^4*beta + 64*alpha^3*beta^2 + 10*alpha^2*beta^3 + 6*alpha^4 + 52*alpha^3*beta + 39*alpha^2*beta^2 + 15*alpha^3 + 49*alpha^2*beta + 9*alpha*beta^2 + 19*alpha^2 + 21*alpha*beta + beta^2 + 12*alpha + 3*beta + 3', 483),
    '12312': ('3*alpha^5*beta^5 + 12*alpha^5*beta^4 + 3*alpha^4*beta^5 + 19*alpha^5*beta^3 + 21*alpha^4*beta^4 + alpha^3*beta^5 + 15*alpha^5*beta^2 + 49*alpha^4*beta^3 + 9*alpha^3*beta^4 + 6*alpha^5*beta + 52*alpha^4*beta^2 + 39*alpha^3*beta^3 + alpha^5 + 26*alpha^4*beta + 64*alpha^3*beta^2 + 10*alpha^2*beta^3 + 5*alpha^4 + 43*alpha^3*beta + 32*alpha^2*beta^2 + alpha*beta^3 + 10*alpha^3 + 32*alpha^2*beta + 5*alpha*beta^2 + 10*alpha^2 + 9*alpha*beta + 5*alpha + 1', 483),
    '12321': ('2*alpha^5*beta^5 + 9*alpha^5*beta^4 + alpha^4*beta^5 + 16*alpha^5*beta^3 + 18*alpha^4*beta^4 + 14*alpha^5*beta^2 + 54*alpha^4*beta^3 + 14*alpha^3*beta^4 + 6*alpha^5*beta + 64*alpha^4*beta^2 + 65*alpha^3*beta^3 + 6*alpha^2*beta^4 + alpha^5 + 33*alpha^4*beta + 101*alpha^3*beta^2 + 33*alpha^2*beta^3 + alpha*beta^4 + 6*alpha^4 + 64*alpha^3*beta + 65*alpha^2*beta^2 + 6*alpha*beta^3 + 14*alpha^3 + 54*alpha^2*beta + 14*alpha*beta^2 + 16*alpha^2 + 18*alpha*beta + 9*alpha + beta + 2', 707),
    '121321': ('alpha^6*beta^6 + 6*alpha^6*beta^5 + 15*alpha^6*beta^4 + 10*alpha^5*beta^5 + 20*alpha^6*beta^3 + 45*alpha^5*beta^4 + 5*alpha^4*beta^5 + 15*alpha^6*beta^2 + 81*alpha^5*beta^3 + 44*alpha^4*beta^4 + alpha^3*beta^5 + 6*alpha^6*beta + 73*alpha^5*beta^2 + 116*alpha^4*beta^3 + 15*alpha^3*beta^4 + alpha^6 + 33*alpha^5*beta + 135*alpha^4*beta^2 + 69*alpha^3*beta^3 + alpha^2*beta^4 + 6*alpha^5 + 73*alpha^4*beta + 116*alpha^3*beta^2 + 15*alpha^2*beta^3 + 15*alpha^4 + 81*alpha^3*beta + 44*alpha^2*beta^2 + alpha*beta^3 + 20*alpha^3 + 45*alpha^2*beta + 5*alpha*beta^2 + 15*alpha^2 + 10*alpha*beta + 6*alpha + 1', None),
}
