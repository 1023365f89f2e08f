"""Published reference values used by the test-suite (transcribed verbatim)."""

# Table 3: conditions on beta for q = 2, k = Z/(nu+N); v = nu, b = beta
TABLE3_ROWS = {
    1: "Z^2*b^2-2*(v+1)^3",
    2: "Z^4*b^4-6*Z^2*(v+2)^3*b^2+4*(2*v+1)*(v+2)^5",
    3: "Z^6*b^6-12*Z^4*(v+3)^3*b^4+4*Z^2*(11*v+18)*(v+3)^5*b^2-24*(2*v+1)*(v+1)*(v+3)^7",
    4: "Z^8*b^8-20*Z^6*(v+4)^3*b^6+20*Z^4*(7*v+19)*(v+4)^5*b^4"
       "-8*Z^2*(50*v^2+193*v+182)*(v+4)^7*b^2+96*(2*v+3)*(2*v+1)*(v+1)*(v+4)^9",
    5: "Z^10*b^10-30*Z^8*(v+5)^3*b^8+20*Z^6*(17*v+64)*(v+5)^5*b^6-24*Z^4*(75*v^2+456*v+685)*(v+5)^7*b^4"
       "+16*Z^2*(274*v^3+1821*v^2+3942*v+2765)*(v+5)^9*b^2-960*(2*v+3)*(2*v+1)*(v+2)*(v+1)*(v+5)^11",
    6: "Z^12*b^12-42*Z^10*(v+6)^3*b^10+140*Z^8*(5*v+24)*(v+6)^5*b^8-168*Z^6*(35*v^2+288*v+588)*(v+6)^7*b^6"
       "+16*Z^4*(1624*v^3+16338*v^2+54099*v+58860)*(v+6)^9*b^4"
       "-288*Z^2*(196*v^4+1956*v^3+7157*v^2+11330*v+6528)*(v+6)^11*b^2"
       "+5760*(2*v+5)*(2*v+3)*(2*v+1)*(v+2)*(v+1)*(v+6)^13",
    7: "Z^14*b^14-56*Z^12*(v+7)^3*b^12+56*Z^10*(23*v+134)*(v+7)^5*b^10-112*Z^8*(140*v^2+1447*v+3719)*(v+7)^7*b^8"
       "+16*Z^6*(6769*v^3+90363*v^2+398730*v+581140)*(v+7)^9*b^6"
       "-64*Z^4*(6566*v^4+96071*v^3+520284*v^2+1234091*v+108054)*(v+7)^11*b^4"
       "+576*Z^2*(1452*v^5+20112*v^4+109039*v^3+288179*v^2+370287*v+184667)*(v+7)^13*b^2"
       "-80640*(2*v+5)*(2*v+3)*(2*v+1)*(v+3)*(v+2)*(v+1)*(v+7)^15",
}

# Tables 1 (q = 1) and 4 (q = 2), Z = 1: (beta, l) -> (energy, N, r0)
TABLE1 = {
    (200, 0): ("-0.0036531689", 14, 210),
    (200, 1): ("-0.0031695328", 17, 210),
    (200, 2): ("-0.0027985618", 17, 210),
    (200, 3): ("-0.0024982718", 17, 210),
    (100, 0): ("-0.0067420767", 17, 120),
    (100, 1): ("-0.0056337379", 19, 120),
    (100, 2): ("-0.0048124934", 23, 140),
    (100, 3): ("-0.0041687844", 13, 150),
    (50, 0): ("-0.0121946926", 16, 75),
    (50, 1): ("-0.0097175884", 18, 100),
    (50, 2): ("-0.0079627963", 13, 100),
    (50, 3): ("-0.0066438818", 16, 110),
    (35, 0): ("-0.0163886724", 20, 65),
    (35, 1): ("-0.0126859243", 16, 65),
    (35, 2): ("-0.0101357167", 12, 75),
    (35, 3): ("-0.0082686807", 14, 90),
    (20, 0): ("-0.0256699378", 38, 65),
    (20, 1): ("-0.0188462206", 30, 65),
    (20, 2): ("-0.0143872079", 22, 65),
    (20, 3): ("-0.0112782933", 22, 75),
    (10, 0): ("-0.0434387193", 56, 45),
    (10, 1): ("-0.0294465157", 49, 55),
    (10, 2): ("-0.0210243016", 43, 65),
    (10, 3): ("-0.0155766001", 42, 75),
}

TABLE4 = {
    (200, 0): ("-0.0045028546", 23, 3),
    (200, 1): ("-0.0041930713", 21, 3),
    (200, 2): ("-0.0039001960", 16, 2),
    (200, 3): ("-0.0036238521", 16, 2),
    (100, 0): ("-0.0086297774", 21, 3),
    (100, 1): ("-0.0078001328", 18, 3),
    (100, 2): ("-0.0070351932", 21, 3),
    (100, 3): ("-0.0063327290", 19, 3),
    (50, 0): ("-0.0162607212", 23, 3),
    (50, 1): ("-0.0140883751", 19, 3),
    (50, 2): ("-0.0121587115", 22, 3),
    (50, 3): ("-0.0104584212", 19, 3),
    (35, 0): ("-0.0223342842", 23, 3),
    (35, 1): ("-0.0188109544", 23, 3),
    (35, 2): ("-0.0157614804", 22, 3),
    (35, 3): ("-0.0131524408", 21, 3),
    (20, 0): ("-0.0361985457", 25, 3),
    (20, 1): ("-0.0288301152", 24, 3),
    (20, 2): ("-0.0227871585", 23, 3),
    (20, 3): ("-0.0179286118", 24, 3),
    (10, 0): ("-0.0637389182", 27, 3),
    (10, 1): ("-0.0461990390", 27, 3),
    (10, 2): ("-0.0331585888", 32, 4),
    (10, 3): ("-0.0238067362", 37, 5),
}

# entries of Table 4 obtained through the scaling law
TABLE4_SCALED = {(200, 2), (200, 3)}

# intermediate energies quoted for the rescaled problem (Z = 4), l = 2 and 3
SCALED_INTERMEDIATE = {2: "-0.0624031366", 3: "-0.0579816331"}

# conditions Delta_2 .. Delta_5 for q = 1 (same notation as TABLE3_ROWS);
# the last factor of Delta_5 is printed as (2n+1), n standing for nu
Q1_CONDITIONS = {
    1: "Z*b-v-1",
    2: "Z^2*(v+1)*b^2-3*Z*(v+2)*(v+1)*b+(2*v+1)*(v+2)^2",
    3: "Z^3*(v+2)*(v+1)*b^3-6*Z^2*(v+3)*(v+2)*(v+1)*b^2+Z*(11*v^2+28*v+15)*(v+3)^2*b"
       "-3*(v+1)*(v+3)^3*(2*v+1)",
    4: "Z^4*(v+3)*(v+2)*(v+1)*b^4-10*Z^3*(v+4)*(v+3)*(v+2)*(v+1)*b^3+Z^2*(35*v^3+195*v^2+328*v+162)*(v+4)^2*b^2"
       "-Z*(50*v^3+231*v^2+313*v+126)*(v+4)^3*b+6*(2*v+3)*(2*n+1)*(v+1)*(v+4)^4",
}
