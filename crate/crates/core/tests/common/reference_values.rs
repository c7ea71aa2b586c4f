// Generated by tests/oracles/pin_values.py (mpmath, 40 digits).
// (sigma, t, a, re, im)
pub const HURWITZ: &[(f64, f64, f64, f64, f64)] = &[
    (2.0, 0.0, 0.3, 12.245364546107731301, 0.0),
    (
        0.5,
        14.0,
        0.3,
        -1.3845570845728235218,
        -0.49103709954933227916,
    ),
    (
        -0.5,
        3.0,
        0.7,
        0.0048054894623615967704,
        0.41149984126887179726,
    ),
    (
        -1.5,
        2.0,
        0.1,
        0.11255170358281765116,
        -0.11679980342360824714,
    ),
    (
        -3.7,
        -8.0,
        0.45,
        1.1801911329363575348,
        2.9246439073283946917,
    ),
    (
        -9.5,
        1.0,
        0.05,
        -0.022142072410020413655,
        0.00064997236115861985597,
    ),
    (
        -11.2,
        27.0,
        0.3,
        336759.22574079399212,
        36202396.969043798279,
    ),
    (
        4.0,
        -44.0,
        0.9,
        -0.21128057152954165877,
        1.5269667275146494322,
    ),
    (
        1.0,
        80.0,
        0.25,
        -1.8135702423430078738,
        -3.168890314323222225,
    ),
    (
        0.5,
        99.0,
        0.5,
        0.41401240760289097134,
        0.064282596496738640327,
    ),
    (
        -20.0,
        5.0,
        0.6,
        -17924.927532765370549,
        -56530.936746489659503,
    ),
    (
        10.0,
        30.0,
        0.02,
        -42392169120748194.688,
        -87975264485538088.588,
    ),
    (0.999, 0.0, 0.4, -997.44086721322175083, 0.0),
    (-1.0, 0.0, 0.37, 0.033216666666666666089, 0.0),
    (
        30.0,
        20.0,
        0.8,
        -199.47401522947986743,
        -782.77746775000714459,
    ),
    (
        -1.2,
        50.0,
        1.0,
        -25.567381521975724961,
        -10.329610919453181133,
    ),
];
pub const PERIODIC: &[(f64, f64, f64, f64, f64)] = &[
    (
        2.0,
        0.0,
        0.3,
        -0.42768285738053882965,
        0.78481578019775085255,
    ),
    (
        0.5,
        14.0,
        0.3,
        1.4639354620539091499,
        0.12251006699706423794,
    ),
    (
        -0.5,
        3.0,
        0.7,
        0.22643364098409951905,
        -0.61337347924774923539,
    ),
    (-1.5, 2.0, 0.1, 9.6640126439648367042, 40.169988748913126129),
    (
        -3.7,
        -8.0,
        0.45,
        -54.508880072498868283,
        -0.64999793708848413271,
    ),
    (
        -9.5,
        1.0,
        0.05,
        883395145829.09349658,
        442613788770.40924673,
    ),
    (
        -11.2,
        27.0,
        0.3,
        -61236889328426.390229,
        61346372748925.025665,
    ),
    (
        4.0,
        -44.0,
        0.9,
        0.76371690941620867176,
        -0.63015627932134863962,
    ),
    (
        1.0,
        80.0,
        0.25,
        -0.31044560019077525703,
        0.075650049557516521751,
    ),
    (
        0.5,
        99.0,
        0.5,
        -0.35751306343016634759,
        0.21845579721829929604,
    ),
    (
        0.76,
        0.0,
        0.2,
        -0.23506743696319708919,
        0.9075343200776820543,
    ),
    (
        0.74,
        -6.0,
        0.2,
        0.7117053134902309305,
        0.98205361573343432856,
    ),
    (1.0, 0.0, 0.01, 2.7674576183973859943, 1.5393804002589986862),
    (
        3.0,
        2.0,
        0.99,
        0.95458218702811900082,
        -0.20148602254760052093,
    ),
    (
        0.3,
        0.0,
        0.002,
        11.710610520001102571,
        24.756825121963531055,
    ),
    (
        -6.0,
        0.0,
        0.15,
        9.5693017535679535002e-39,
        -1090.015219850473082,
    ),
];
