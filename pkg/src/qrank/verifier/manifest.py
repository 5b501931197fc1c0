"""Coverage manifest: every in-scope statement, one registered check each.

The registry anchors must equal this list exactly (see tests/test_manifest.py).
"""

PARTITIONS_AND_RANKS = (
    "partition numbers p(n)",
    "rank counts N(m,n) and residue counts N(m,t,n)",
    "Ramanujan's congruences for p(n) mod 5, 7, 11",
    "Dyson's rank conjecture mod 5: five equal classes",
    "Dyson's rank conjecture mod 7: seven equal classes",
    "failure of the analogous statement mod 11",
)

THETA_AND_APPELL = (
    "two-variable rank generating function R(z;q): counts, nested sum, Lambert form",
    "Jacobi triple product: j(z;q) as product equals its bilateral sum",
    "theta-type products J_{b,a} = j(q^a;q^b) and J_b = (q^b;q^b)_inf",
    "Bradley-Thrush theta-Lambert transformation (instances used for two rank identities)",
    "f_{a,b,c}(x,y,q) double sum over sg(r) = sg(s)",
    "Appell-Lerch series m(x,q,z)",
    "g_{a,b,c}(x,y,q,z1,z0) as theta-weighted Appell-Lerch sums",
    "universal mock theta function g(x,q)",
    "R(z;q) = (1-z)(1 + z g(z,q))",
    "g(z,q) in terms of m(x,q^3,z)",
    "m(x,q,z) = m(x,q,qz)",
    "m(x,q,z) = x^-1 m(x^-1,q,z^-1)",
    "m(qx,q,z) = 1 - x m(x,q,z)",
    "m(x,q,z1) - m(x,q,z0) as a theta quotient",
    "three-term theta-function identity",
    "four-term Appell-Lerch identity reduced to a three-term theta identity",
    "f_{n,n+1,n} = g_{n,n+1,n} for n = 1 (z1 = y/x, z0 = x/y)",
    "f_{1,2,1} pair as the rankid3 double sum",
    "f_{1,2,1} pair = g_{1,2,1} pair = theta times Appell-Lerch",
)

HECKE_ROGERS = (
    "z-analog identity 1: (zq,z^-1q,q)_inf R(z;q)",
    "z-analog identity 2: (zq,z^-1q,q)_inf R(z;q^2)",
    "z-analog identity 3: (1+z)(z^2q,z^-2q,q)_inf R(z;q)",
    "z-analog identity 4: (1+z)(z^2q^2,z^-2q^2,q^2;q^2)_inf R(z;q)",
    "E(q)^2 as a Hecke-Rogers double sum (z = 1 in rankid1 and rankid3)",
    "Rogers' bilateral double sum for E(q)^2",
    "theta_4(q) E(q) = (q)^3_inf/(q^2;q^2)_inf as a double sum (z = 1 in rankid2)",
)

MOD5_PROOF = (
    "p-dissection of a series into p parts",
    "Atkin operators U_{p,r}, U*_{p,m} and A_{p,m}",
    "5-dissection of (zeta q, zeta^-1 q, q)_inf, zeta = exp(2 pi i/5)",
    "5-dissection of E(q)",
    "5-dissection of theta_4(q)",
    "J_{10,1}J_{10,4}/J_10^2 = J_{5,1}/J_5 and its companion",
    "U_{5,2}(E(q)^2) = -J_5^2",
    "U_{5,3}(theta_4 E) = 2 J_5 J_{5,1} J_{10,3}/J_{5,2}",
    "U_{5,4}(theta_4 E) = 2 J_5 J_{5,2} J_{10,1}/J_{5,1}",
    "U_{5,2}((zeta q,zeta^-1 q,q)_inf R(zeta,q)) = -J_5^2",
    "U_{5,3}((zeta q,zeta^-1 q,q)_inf R(zeta,q^2)) = (zeta^2+zeta^3) J_5 J_{5,1} J_{10,3}/J_{5,2}",
    "U_{5,4}((zeta q,zeta^-1 q,q)_inf R(zeta,q^2)) = (zeta+zeta^4) J_5 J_{5,2} J_{10,1}/J_{5,1}",
    "U_{5,4}(R(zeta,q)) = 0, equivalent to the mod 5 conjecture",
    "U_{5,3}(R(zeta,q^2)) = 0",
    "linear equation 1 for R_2, R_4 (q replaced by q^2)",
    "linear equation 2 for R_2, R_3",
    "linear equation 3 for R_3, R_4",
    "R_3 = 0 by direct dissection and by the solved linear system",
    "determinant D(q) and its reference expansion through q^11",
    "D(q) = J_10^3 J_1^6/(J_5^2 J_2)",
    "product forms of R_2 and R_4 for R(zeta,q^2)",
)

RAMANUJAN_MOD5 = (
    "products A, B, C, D and the series phi, psi",
    "Ramanujan's mod 5 identity for R(zeta,q)",
    "R_1, R_2, R_4 of R(zeta,q)",
    "R_0 of R(zeta,q) in terms of phi",
    "R_3 of R(zeta,q) in terms of psi(q)/q",
    "R~(z,q) = (1+z)(z^2q,z^-2q,q)_inf R(z,q)",
    "U_{5,0}(R~(zeta,q)) via the residue table",
    "U_{5,4}(R~(zeta,q)) via the residue table",
    "reindexing V(5n+1,-5j-1) and V(5n+3,-5j-1) with the solved j-ranges",
    "A_{5,0} of the S_2 residue-class sum = R~(q,q^5) - J_{5,2}",
    "S_1 residue-class sum = U*_{5,0}(E^2) = J_25^2 J_{25,10}^2/J_{25,5}^2",
    "R~(q,q^5) = J_{5,2}(1 + phi(q))",
    "U_{5,0}(R~(zeta,q)) = (1+zeta) J_{5,2} R_0(q)",
)

MOD7 = (
    "7-dissection of (zeta q, zeta^-1 q, q)_inf, zeta = exp(2 pi i/7)",
    "U_{7,4}((zeta q,zeta^-1 q,q)_inf R(zeta,q)) = J_7^2, zeta = exp(2 pi i/7)",
    "U_{7,4}(R~(zeta,q)) = 2 zeta^4 J_7^2",
    "U_{7,3}((1+zeta)(zeta^2q^2,zeta^-2q^2,q^2;q^2)_inf R(zeta,q)) = 2 zeta^4 q J_14^3/J_7",
    "mod 7 linear equation 1 for R_1, R_3, R_4",
    "mod 7 linear equation 2 for R_1, R_3, R_4",
    "mod 7 linear equation 3 for R_1, R_3, R_4 (q replaced by q^2)",
    "product forms of R_1, R_3, R_4 for R(zeta,q), zeta = exp(2 pi i/7)",
)

IN_SCOPE = PARTITIONS_AND_RANKS + THETA_AND_APPELL + HECKE_ROGERS + MOD5_PROOF + RAMANUJAN_MOD5 + MOD7
