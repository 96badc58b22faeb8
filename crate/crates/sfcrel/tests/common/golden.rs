//! Golden values for the published numerical studies, used by the
//! acceptance suite.

/// 16-placement study, `k = 1`: `(nr, delta,`
/// `[case1 psi4 r0/r1/r100, case1 psi8 ..., case2 psi4 ..., case2 psi8 ...])`
/// with `None` for the cells published only as a limit.
pub const TABLE2: [(usize, usize, [(f64, f64, Option<f64>); 4]); 16] = [
    (4, 1, [(0.9595298551, 0.9995123444, None), (0.9217205502, 0.999029523, None), (0.999930003, 0.9999999963, None), (0.9998900055, 0.9999999935, None)]),
    (4, 2, [(0.9566541431, 0.9995075495, None), (0.9152878303, 0.9990157556, None), (0.9999000045, 0.9999999948, None), (0.9998200153, 0.99999999, None)]),
    (4, 3, [(0.9563671756, 0.9995073731, None), (0.914647321, 0.9990150262, None), (0.9998700078, 0.9999999939, None), (0.99975003, 0.9999999879, None)]),
    (4, 4, [(0.9563384848, 0.9995073585, None), (0.9145832976, 0.9990149596, None), (0.999840012, 0.9999999936, None), (0.9996800496, 0.9999999872, None)]),
    (3, 1, [(0.9595298551, 0.9995031488, Some(0.9999899999)), (0.9217205502, 0.9990210788, Some(0.9999899999)), (0.999930003, 0.9999899976, Some(0.9999899999)), (0.9998900055, 0.9999899956, Some(0.9999899999))]),
    (3, 2, [(0.9566541431, 0.9994984114, Some(0.9999899999)), (0.9152878303, 0.9990074399, Some(0.9999899999)), (0.9999000045, 0.9999899967, Some(0.9999899999)), (0.9998200153, 0.9999899935, Some(0.9999899999))]),
    (3, 3, [(0.9563671756, 0.9994982407, Some(0.9999899999)), (0.914647321, 0.9990067233, Some(0.9999899999)), (0.9998700078, 0.9999899964, Some(0.9999899999)), (0.99975003, 0.9999899928, Some(0.9999899999))]),
    (3, 4, [(0.9563384848, 0.9994682561, Some(0.9999600006)), (0.9145832976, 0.9989367949, Some(0.9999200028)), (0.999840012, 0.999959997, Some(0.9999600006)), (0.9996800496, 0.9999199956, Some(0.9999200028))]),
    (2, 1, [(0.9595298551, 0.999411184, Some(0.9998900009)), (0.9217205502, 0.9989366284, Some(0.9998900009)), (0.999930003, 0.9999799988, Some(0.9999800001)), (0.9998900055, 0.9999799976, Some(0.9999800001))]),
    (2, 2, [(0.9566541431, 0.9994070213, Some(0.9998900009)), (0.9152878303, 0.9989242748, Some(0.9998900009)), (0.9999000045, 0.9999799985, Some(0.9999800001)), (0.9998200153, 0.9999799969, Some(0.9999800001))]),
    (2, 3, [(0.9563671756, 0.9991072291, Some(0.999590064)), (0.914647321, 0.9982252375, Some(0.9991902879)), (0.9998700078, 0.9999499994, Some(0.999950001)), (0.99975003, 0.9999100004, Some(0.9999100036))]),
    (2, 4, [(0.9563384848, 0.9990772562, Some(0.9995600766)), (0.9145832976, 0.9981553639, Some(0.9991203467)), (0.999840012, 0.9999200012, Some(0.9999200028)), (0.9996800496, 0.9998400088, Some(0.999840012))]),
    (1, 1, [(0.9595298551, 0.9984906149, Some(0.9988901109)), (0.9217205502, 0.9980912785, Some(0.9988901109)), (0.999930003, 0.9999699999, Some(0.9999700003)), (0.9998900055, 0.9999699995, Some(0.9999700003))]),
    (1, 2, [(0.9566541431, 0.9954981375, Some(0.9958964363)), (0.9152878303, 0.9911255646, Some(0.9919188219)), (0.9999000045, 0.9999400011, Some(0.9999400015)), (0.9998200153, 0.9999000037, Some(0.9999000045))]),
    (1, 3, [(0.9563671756, 0.9951995179, Some(0.9955976973)), (0.914647321, 0.9904319848, Some(0.9912246871)), (0.9998700078, 0.9999100032, Some(0.9999100036)), (0.99975003, 0.9998300128, Some(0.9998300136))]),
    (1, 4, [(0.9563384848, 0.9951696622, Some(0.9955678297)), (0.9145832976, 0.9903626567, Some(0.9911553034)), (0.999840012, 0.9998800062, Some(0.9998800066)), (0.9996800496, 0.9997600268, Some(0.9997600276))]),
];

/// `k`-vs-`r` study at placement `(4, 1)`, practical profile:
/// `(ratio_eighths, k, r, psi, value)`.
pub const TABLE3: [(u32, u64, u64, u32, f64); 40] = [
    (0, 1, 0, 4, 0.959529855054096),
    (0, 4, 0, 4, 0.847683965207723),
    (0, 8, 0, 4, 0.718568104870289),
    (0, 1, 0, 8, 0.921720550240843),
    (0, 4, 0, 8, 0.721767099608634),
    (0, 8, 0, 8, 0.52094774607746),
    (1, 8, 1, 4, 0.983696719311009),
    (1, 8, 1, 8, 0.968371471691151),
    (2, 4, 1, 4, 0.995273874413365),
    (2, 8, 2, 4, 0.999384198321856),
    (2, 4, 1, 8, 0.990697185787667),
    (2, 8, 2, 8, 0.998774974539633),
    (3, 8, 3, 4, 0.999981195954079),
    (3, 8, 3, 8, 0.999962424513603),
    (4, 4, 2, 4, 0.999893621626573),
    (4, 8, 4, 4, 0.999999500094456),
    (4, 4, 2, 8, 0.999787784003278),
    (4, 8, 4, 8, 0.999999000321022),
    (5, 8, 5, 4, 0.999999987999969),
    (5, 8, 5, 8, 0.999999976000402),
    (6, 4, 3, 4, 0.999997932451063),
    (6, 8, 6, 4, 0.999999999734),
    (6, 4, 3, 8, 0.999995866449611),
    (6, 8, 6, 8, 0.999999999468002),
    (7, 8, 7, 4, 0.99999999999447),
    (7, 8, 7, 8, 0.999999999988942),
    (8, 1, 1, 4, 0.999512344397461),
    (8, 4, 4, 4, 0.999999963313851),
    (8, 8, 8, 4, 0.99999999999989),
    (8, 1, 1, 8, 0.999029523012867),
    (8, 4, 4, 8, 0.999999926631523),
    (8, 8, 8, 8, 0.999999999999781),
    (9, 8, 9, 4, 0.999999999999997),
    (9, 8, 9, 8, 0.999999999999995),
    (10, 4, 5, 4, 0.999999999389706),
    (10, 8, 10, 4, 0.999999999999999),
    (10, 4, 5, 8, 0.999999998779421),
    (10, 8, 10, 8, 0.999999999999998),
    (11, 8, 11, 4, 0.999999999999999),
    (11, 8, 11, 8, 0.999999999999999),
];

/// Two-class study (`k = 4`, `r = 3`, `psi = 4`, practical profile):
/// `(active_nr, active_delta, backup_nr, backup_delta, value)`.
pub const TABLE4: [(usize, usize, usize, usize, f64); 128] = [
    (4, 1, 4, 1, 0.999997932451064),
    (4, 1, 4, 2, 0.999997931865504),
    (4, 1, 4, 3, 0.99999793182867),
    (4, 1, 4, 4, 0.999997931825184),
    (4, 1, 3, 1, 0.999996412439361),
    (4, 1, 3, 2, 0.999996411858317),
    (4, 1, 3, 3, 0.999996411821876),
    (4, 1, 3, 4, 0.999996188540272),
    (4, 2, 4, 1, 0.999997931783531),
    (4, 2, 4, 2, 0.999997931700513),
    (4, 2, 4, 3, 0.999997931697576),
    (4, 2, 4, 4, 0.999997931697323),
    (4, 2, 3, 1, 0.9999963106145),
    (4, 2, 3, 2, 0.999996310532635),
    (4, 2, 3, 3, 0.999996310529777),
    (4, 2, 3, 4, 0.999996188399384),
    (4, 3, 4, 1, 0.999997931753535),
    (4, 3, 4, 2, 0.999997931696835),
    (4, 3, 4, 3, 0.999997931695194),
    (4, 3, 4, 4, 0.999997931695059),
    (4, 3, 3, 1, 0.999996300539636),
    (4, 3, 3, 2, 0.999996300483819),
    (4, 3, 3, 3, 0.999996300482234),
    (4, 3, 3, 4, 0.999996188395716),
    (4, 4, 4, 1, 0.999997931750833),
    (4, 4, 4, 2, 0.999997931696546),
    (4, 4, 4, 3, 0.999997931695016),
    (4, 4, 4, 4, 0.999997931694891),
    (4, 4, 3, 1, 0.999996299533152),
    (4, 4, 3, 2, 0.999996299479723),
    (4, 4, 3, 3, 0.999996299478246),
    (4, 4, 3, 4, 0.999996188395406),
    (3, 1, 4, 1, 0.999987936641463),
    (3, 1, 4, 2, 0.999987936063937),
    (3, 1, 4, 3, 0.99998793602769),
    (3, 1, 4, 4, 0.999987936024261),
    (3, 1, 3, 1, 0.999986416978584),
    (3, 1, 3, 2, 0.999986416405527),
    (3, 1, 3, 3, 0.99998641636967),
    (3, 1, 3, 4, 0.999986194281234),
    (3, 2, 4, 1, 0.999987935981971),
    (3, 2, 4, 2, 0.999987935901947),
    (3, 2, 4, 3, 0.999987935899162),
    (3, 2, 4, 4, 0.999987935898924),
    (3, 2, 3, 1, 0.999986315158664),
    (3, 2, 3, 2, 0.999986315079763),
    (3, 2, 3, 3, 0.999986315077056),
    (3, 2, 3, 4, 0.999986194142865),
    (3, 3, 4, 1, 0.999987935952563),
    (3, 3, 4, 2, 0.999987935898422),
    (3, 3, 4, 3, 0.999987935896897),
    (3, 3, 4, 4, 0.999987935896772),
    (3, 3, 3, 1, 0.999986305084081),
    (3, 3, 3, 2, 0.999986305030796),
    (3, 3, 3, 3, 0.999986305029324),
    (3, 3, 3, 4, 0.999986194139309),
    (3, 4, 4, 1, 0.99995793661448),
    (3, 4, 4, 2, 0.999957936560341),
    (3, 4, 4, 3, 0.999957936558816),
    (3, 4, 4, 4, 0.999957936558691),
    (3, 4, 3, 1, 0.999956305794924),
    (3, 4, 3, 2, 0.999956305741641),
    (3, 4, 3, 3, 0.999956305740169),
    (3, 4, 3, 4, 0.999956194853481),
    (2, 1, 4, 1, 0.999887979247724),
    (2, 1, 4, 2, 0.999887978747081),
    (2, 1, 4, 3, 0.999887978716417),
    (2, 1, 4, 4, 0.999887978713526),
    (2, 1, 3, 1, 0.999886463073873),
    (2, 1, 3, 2, 0.999886462577264),
    (2, 1, 3, 3, 0.999886462546948),
    (2, 1, 3, 4, 0.999886252392045),
    (2, 2, 4, 1, 0.999887978666185),
    (2, 2, 4, 2, 0.999887978613487),
    (2, 2, 4, 3, 0.999887978612013),
    (2, 2, 4, 4, 0.999887978611892),
    (2, 2, 3, 1, 0.999886361300929),
    (2, 2, 3, 2, 0.999886361249067),
    (2, 2, 3, 3, 0.999886361247645),
    (2, 2, 3, 4, 0.999886252277338),
    (2, 3, 4, 1, 0.999588042268225),
    (2, 3, 4, 2, 0.999588042215542),
    (2, 3, 4, 3, 0.999588042214069),
    (2, 3, 4, 4, 0.999588042213949),
    (2, 3, 3, 1, 0.99958642538813),
    (2, 3, 3, 2, 0.999586425336284),
    (2, 3, 3, 3, 0.999586425334862),
    (2, 3, 3, 4, 0.999586316397243),
    (2, 4, 4, 1, 0.999558054926832),
    (2, 4, 4, 2, 0.999558054874151),
    (2, 4, 4, 3, 0.999558054872677),
    (2, 4, 4, 4, 0.999558054872557),
    (2, 4, 3, 1, 0.999556438095243),
    (2, 4, 3, 2, 0.999556438043398),
    (2, 4, 3, 3, 0.999556438041976),
    (2, 4, 3, 4, 0.999556329107625),
    (1, 1, 4, 1, 0.998888476185578),
    (1, 1, 4, 2, 0.998888476145756),
    (1, 1, 4, 3, 0.998888476144722),
    (1, 1, 4, 4, 0.998888476144638),
    (1, 1, 3, 1, 0.998886994982242),
    (1, 1, 3, 2, 0.998886994943076),
    (1, 1, 3, 3, 0.99888699494208),
    (1, 1, 3, 4, 0.998886904308337),
    (1, 2, 4, 1, 0.995894806423561),
    (1, 2, 4, 2, 0.995894806383859),
    (1, 2, 4, 3, 0.995894806382827),
    (1, 2, 4, 4, 0.995894806382744),
    (1, 2, 3, 1, 0.995893329659393),
    (1, 2, 3, 2, 0.995893329620344),
    (1, 2, 3, 3, 0.995893329619351),
    (1, 2, 3, 4, 0.995893239257238),
    (1, 3, 4, 1, 0.995596067857482),
    (1, 3, 4, 2, 0.995596067817792),
    (1, 3, 4, 3, 0.995596067816761),
    (1, 3, 4, 4, 0.995596067816678),
    (1, 3, 3, 1, 0.995594591536299),
    (1, 3, 3, 2, 0.995594591497262),
    (1, 3, 3, 3, 0.995594591496269),
    (1, 3, 3, 4, 0.995594501161262),
    (1, 4, 4, 1, 0.995566200274125),
    (1, 4, 4, 2, 0.995566200234436),
    (1, 4, 4, 3, 0.995566200233405),
    (1, 4, 4, 4, 0.995566200233322),
    (1, 4, 3, 1, 0.995564723997231),
    (1, 4, 3, 2, 0.995564723958195),
    (1, 4, 3, 3, 0.995564723957202),
    (1, 4, 3, 4, 0.995564633624905),
];
