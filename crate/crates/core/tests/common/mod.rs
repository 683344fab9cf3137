/// (d, h, h+, N(ε), x, y, w) with ε = (x + y sqrt d)/w, from an independent
/// mpmath evaluation of the analytic formula and a brute-force unit search.
pub const QUADRATIC_TABLE: [(u64, u64, u64, i8, u64, u64, u64); 60] = [
    (2, 1, 1, -1, 1, 1, 1),
    (3, 1, 2, 1, 2, 1, 1),
    (5, 1, 1, -1, 1, 1, 2),
    (6, 1, 2, 1, 5, 2, 1),
    (7, 1, 2, 1, 8, 3, 1),
    (10, 2, 2, -1, 3, 1, 1),
    (11, 1, 2, 1, 10, 3, 1),
    (13, 1, 1, -1, 3, 1, 2),
    (14, 1, 2, 1, 15, 4, 1),
    (15, 2, 4, 1, 4, 1, 1),
    (17, 1, 1, -1, 8, 2, 2),
    (19, 1, 2, 1, 170, 39, 1),
    (21, 1, 2, 1, 5, 1, 2),
    (22, 1, 2, 1, 197, 42, 1),
    (23, 1, 2, 1, 24, 5, 1),
    (26, 2, 2, -1, 5, 1, 1),
    (29, 1, 1, -1, 5, 1, 2),
    (30, 2, 4, 1, 11, 2, 1),
    (31, 1, 2, 1, 1520, 273, 1),
    (33, 1, 2, 1, 46, 8, 2),
    (34, 2, 4, 1, 35, 6, 1),
    (35, 2, 4, 1, 6, 1, 1),
    (37, 1, 1, -1, 12, 2, 2),
    (38, 1, 2, 1, 37, 6, 1),
    (39, 2, 4, 1, 25, 4, 1),
    (41, 1, 1, -1, 64, 10, 2),
    (42, 2, 4, 1, 13, 2, 1),
    (43, 1, 2, 1, 3482, 531, 1),
    (46, 1, 2, 1, 24335, 3588, 1),
    (47, 1, 2, 1, 48, 7, 1),
    (51, 2, 4, 1, 50, 7, 1),
    (53, 1, 1, -1, 7, 1, 2),
    (55, 2, 4, 1, 89, 12, 1),
    (57, 1, 2, 1, 302, 40, 2),
    (58, 2, 2, -1, 99, 13, 1),
    (59, 1, 2, 1, 530, 69, 1),
    (61, 1, 1, -1, 39, 5, 2),
    (62, 1, 2, 1, 63, 8, 1),
    (65, 2, 2, -1, 16, 2, 2),
    (66, 2, 4, 1, 65, 8, 1),
    (67, 1, 2, 1, 48842, 5967, 1),
    (69, 1, 2, 1, 25, 3, 2),
    (70, 2, 4, 1, 251, 30, 1),
    (71, 1, 2, 1, 3480, 413, 1),
    (73, 1, 1, -1, 2136, 250, 2),
    (74, 2, 2, -1, 43, 5, 1),
    (77, 1, 2, 1, 9, 1, 2),
    (78, 2, 4, 1, 53, 6, 1),
    (79, 3, 6, 1, 80, 9, 1),
    (82, 4, 4, -1, 9, 1, 1),
    (83, 1, 2, 1, 82, 9, 1),
    (85, 2, 2, -1, 9, 1, 2),
    (86, 1, 2, 1, 10405, 1122, 1),
    (87, 2, 4, 1, 28, 3, 1),
    (89, 1, 1, -1, 1000, 106, 2),
    (91, 2, 4, 1, 1574, 165, 1),
    (93, 1, 2, 1, 29, 3, 2),
    (94, 1, 2, 1, 2143295, 221064, 1),
    (95, 2, 4, 1, 39, 4, 1),
    (97, 1, 1, -1, 11208, 1138, 2),
];
