//! Published reference values used by the acceptance checks, transcribed
//! verbatim (including one known misprint, see [`KNOWN_MISPRINTS`]).
//!
//! Series tables are keyed by row `n` (outside edges) and list the entries
//! for `m = 1, 2, ...` (cells).

/// Per-type face counts for polygons with 5 to 10 sides, as
/// `(sides, signature, count)` in printed order.
///
/// Three printed rows carry multiplicities that cannot fit their polygon;
/// they appear here with the unique signature matching both the polygon and
/// the printed count (see [`TYPE_ROW_CORRECTIONS`]).
pub const TABLE_TYPES: &[(u32, &str, u64)] = &[
    (5, "<3^3>", 5),
    (5, "<3:4>", 5),
    (5, "<5>", 1),
    (6, "<3^4>", 14),
    (6, "<3^2:4>", 21),
    (6, "<3:5>", 6),
    (6, "<4^2>", 3),
    (6, "<6>", 1),
    (7, "<3^5>", 42),
    (7, "<3^3:4>", 84),
    (7, "<3^2:5>", 28),
    (7, "<3:4^2>", 28),
    (7, "<4:5>", 7),
    (7, "<3:6>", 7),
    (7, "<7>", 1),
    (8, "<3^6>", 132),
    (8, "<3^4:4>", 330),
    (8, "<3^3:5>", 120),
    (8, "<3^2:4^2>", 180),
    (8, "<3^2:6>", 36),
    (8, "<3:4:5>", 72),
    (8, "<4^3>", 12),
    (8, "<3:7>", 8),
    (8, "<4:6>", 8),
    (8, "<5^2>", 4),
    (8, "<8>", 1),
    (9, "<3^7>", 429),
    (9, "<3^5:4>", 1287),
    (9, "<3^3:4^2>", 990),
    (9, "<3^3:6>", 165),
    (9, "<3^2:4:5>", 495),
    (9, "<3^4:5>", 495),
    (9, "<3:4^3>", 165),
    (9, "<3^2:7>", 45),
    (9, "<4^2:5>", 45),
    (9, "<3:8>", 9),
    (9, "<4:7>", 9),
    (9, "<5:6>", 9),
    (9, "<9>", 1),
    (10, "<3^8>", 1430),
    (10, "<3^6:4>", 5005),
    (10, "<3^5:5>", 2002),
    (10, "<3^4:4^2>", 5005),
    (10, "<3^4:6>", 715),
    (10, "<3^3:4:5>", 2860),
    (10, "<3^2:4^3>", 1430),
    (10, "<3^3:7>", 220),
    (10, "<3^2:5^2>", 330),
    (10, "<3^2:4:6>", 660),
    (10, "<3:4^2:5>", 660),
    (10, "<4^4>", 55),
    (10, "<3^2:8>", 55),
    (10, "<3:4:7>", 110),
    (10, "<3:5:6>", 110),
    (10, "<4^2:6>", 55),
    (10, "<4:5^2>", 55),
    (10, "<3:9>", 10),
    (10, "<4:8>", 10),
    (10, "<5:7>", 10),
    (10, "<6^2>", 5),
    (10, "<10>", 1),
];

/// Printed type rows whose multiplicity columns are inconsistent with their
/// polygon: `(sides, printed multiplicities, count, corrected signature)`.
pub type TypeRowCorrection = (u32, &'static [(u32, u32)], u64, &'static str);

pub const TYPE_ROW_CORRECTIONS: &[TypeRowCorrection] = &[
    (7, &[(4, 1), (5, 2)], 7, "<4:5>"),
    (8, &[(3, 2), (5, 2)], 180, "<3^2:4^2>"),
    (9, &[(3, 3), (5, 1)], 495, "<3^4:5>"),
];

/// Types absent from the printed nonagon block, with their counts as given by
/// the per-type formula and by brute force.
pub const TYPE_ROWS_MISSING: &[(u32, &str, u64)] = &[(9, "<3:4:6>", 90), (9, "<3:5^2>", 45)];

pub const TABLE_A: &[(u32, &[u64])] = &[
    (2, &[1]),
    (3, &[1, 1]),
    (4, &[1, 3, 2]),
    (5, &[1, 5, 8, 3]),
    (6, &[1, 8, 22, 20, 6]),
    (7, &[1, 11, 46, 73, 49, 11]),
    (8, &[1, 15, 87, 206, 233, 119, 23]),
    (9, &[1, 19, 147, 485, 807, 689, 288, 46]),
    (10, &[1, 24, 236, 1021, 2320, 2891, 1988, 696, 98]),
    (11, &[1, 29, 356, 1960, 5795, 9800, 9737, 5561, 1681, 207]),
    (
        12,
        &[
            1, 35, 520, 3525, 13088, 28586, 38216, 31350, 15322, 4062, 451,
        ],
    ),
    (
        13,
        &[
            1, 41, 730, 5989, 27224, 74280, 127465, 139901, 97552, 41558, 9821, 983,
        ],
    ),
];

pub const TABLE_V: &[(u32, &[u64])] = &[
    (2, &[1]),
    (3, &[1, 2]),
    (4, &[1, 5, 5]),
    (5, &[1, 9, 21, 14]),
    (6, &[1, 14, 56, 84, 42]),
    (7, &[1, 20, 120, 300, 330, 132]),
    (8, &[1, 27, 225, 825, 1485, 1287, 429]),
    (9, &[1, 35, 385, 1925, 5005, 7007, 5005, 1430]),
    (10, &[1, 44, 616, 4004, 14014, 28028, 32032, 19448, 4862]),
    (
        11,
        &[1, 54, 936, 7644, 34398, 91728, 148512, 143208, 75582, 16796],
    ),
    (
        12,
        &[
            1, 65, 1365, 13650, 76440, 259896, 556920, 755820, 629850, 293930, 58786,
        ],
    ),
];

pub const TABLE_B: &[(u32, &[u64])] = &[
    (3, &[1]),
    (4, &[1, 1]),
    (5, &[1, 2, 2]),
    (6, &[1, 3, 7, 4]),
    (7, &[1, 4, 15, 18, 7]),
    (8, &[1, 5, 28, 57, 49, 14]),
    (9, &[1, 6, 45, 138, 196, 123, 29]),
    (10, &[1, 7, 69, 288, 601, 626, 313, 60]),
    (11, &[1, 8, 98, 540, 1533, 2322, 1899, 778, 127]),
    (12, &[1, 9, 136, 943, 3468, 7095, 8362, 5565, 1936, 275]),
    (
        13,
        &[
            1, 10, 180, 1544, 7124, 18813, 29741, 28350, 15880, 4776, 598,
        ],
    ),
    (
        14,
        &[
            1, 11, 235, 2419, 13635, 44868, 90869, 115642, 92210, 44433, 11777, 1320,
        ],
    ),
];

pub const TABLE_F: &[(u32, &[u64])] = &[
    (3, &[1]),
    (4, &[1, 1]),
    (5, &[1, 1, 1]),
    (6, &[1, 2, 3, 2]),
    (7, &[1, 2, 6, 5, 2]),
    (8, &[1, 3, 11, 17, 12, 4]),
    (9, &[1, 3, 17, 37, 44, 23, 6]),
    (10, &[1, 4, 26, 78, 131, 118, 52, 11]),
    (11, &[1, 4, 36, 140, 325, 410, 298, 109, 18]),
    (12, &[1, 5, 50, 248, 728, 1249, 1279, 766, 244, 37]),
    (13, &[1, 5, 65, 396, 1476, 3246, 4462, 3763, 1921, 532, 66]),
    (
        14,
        &[
            1, 6, 85, 624, 2811, 7717, 13497, 15198, 10920, 4843, 1196, 135,
        ],
    ),
    (
        15,
        &[
            1, 6, 106, 929, 5032, 16773, 36384, 52041, 49577, 30848, 12068, 2671, 265,
        ],
    ),
];

/// Printed entries known to disagree with every independent computation:
/// `(table, m, n, printed, computed)`.
pub const KNOWN_MISPRINTS: &[(char, u32, u32, u64, u64)] = &[('b', 6, 12, 7095, 7098)];

/// Looks up a printed entry of one of the series tables.
pub fn series_entry(table: &[(u32, &[u64])], m: u32, n: u32) -> Option<u64> {
    let (_, row) = table.iter().find(|(r, _)| *r == n)?;
    row.get(m.checked_sub(1)? as usize).copied()
}

/// All printed entries of a series table as `(m, n, value)`.
pub fn series_entries(
    table: &'static [(u32, &'static [u64])],
) -> impl Iterator<Item = (u32, u32, u64)> {
    table.iter().flat_map(|(n, row)| {
        row.iter()
            .enumerate()
            .map(move |(j, v)| (j as u32 + 1, *n, *v))
    })
}

/// The table for a series letter `a`, `v`, `b` or `f`.
pub fn series_table(which: char) -> Option<&'static [(u32, &'static [u64])]> {
    match which {
        'a' => Some(TABLE_A),
        'v' => Some(TABLE_V),
        'b' => Some(TABLE_B),
        'f' => Some(TABLE_F),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::TypeSignature;

    #[test]
    fn lookups() {
        assert_eq!(series_entry(TABLE_A, 2, 4), Some(3));
        assert_eq!(series_entry(TABLE_F, 7, 10), Some(52));
        assert_eq!(series_entry(TABLE_B, 6, 12), Some(7095));
        assert_eq!(series_entry(TABLE_V, 0, 4), None);
        assert_eq!(series_entry(TABLE_V, 4, 3), None);
        assert_eq!(series_entries(TABLE_F).count(), (1..=13).sum::<usize>());
        assert!(series_table('x').is_none());
    }

    #[test]
    fn type_rows_fit_their_polygons() {
        for (sides, sig, _) in TABLE_TYPES.iter().chain(TYPE_ROWS_MISSING) {
            let s: TypeSignature = sig.parse().unwrap();
            assert_eq!(s.polygon_sides(), *sides, "{sig}");
        }
        for (sides, printed, _, _) in TYPE_ROW_CORRECTIONS {
            let s = TypeSignature::from_cell_sizes(
                printed
                    .iter()
                    .flat_map(|(i, m)| std::iter::repeat_n(*i, *m as usize)),
            )
            .unwrap();
            assert_ne!(s.polygon_sides(), *sides);
        }
    }
}
