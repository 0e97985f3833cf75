//! Published values `(d(n, k), N(n, k, d(n, k)))` for `2 <= k <= n - 1 <= 15`.

/// `(n, k, d(n, k), number of inequivalent LCD [n, k, d(n, k)] codes)`.
pub const TABLE: &[(usize, usize, usize, usize)] = &[
    (3, 2, 2, 1),
    (4, 2, 2, 2), (4, 3, 1, 2),
    (5, 2, 2, 3), (5, 3, 2, 1), (5, 4, 2, 1),
    (6, 2, 3, 2), (6, 3, 2, 3), (6, 4, 2, 4), (6, 5, 1, 3),
    (7, 2, 4, 1), (7, 3, 3, 1), (7, 4, 2, 9), (7, 5, 2, 2), (7, 6, 2, 1),
    (8, 2, 5, 1), (8, 3, 3, 3), (8, 4, 3, 1), (8, 5, 2, 9), (8, 6, 2, 6), (8, 7, 1, 4),
    (9, 2, 6, 1), (9, 3, 4, 1), (9, 4, 4, 1), (9, 5, 3, 2), (9, 6, 2, 23), (9, 7, 2, 3),
    (9, 8, 2, 1),
    (10, 2, 6, 2), (10, 3, 5, 1), (10, 4, 4, 5), (10, 5, 3, 11), (10, 6, 3, 2), (10, 7, 2, 23),
    (10, 8, 2, 9), (10, 9, 1, 5),
    (11, 2, 6, 4), (11, 3, 5, 6), (11, 4, 4, 20), (11, 5, 4, 4), (11, 6, 4, 1), (11, 7, 3, 1),
    (11, 8, 2, 51), (11, 9, 2, 4), (11, 10, 2, 1),
    (12, 2, 7, 2), (12, 3, 6, 1), (12, 4, 5, 6), (12, 5, 4, 37), (12, 6, 4, 11), (12, 7, 3, 22),
    (12, 8, 2, 396), (12, 9, 2, 51), (12, 10, 2, 12), (12, 11, 1, 6),
    (13, 2, 8, 1), (13, 3, 6, 6), (13, 4, 6, 2), (13, 5, 5, 5), (13, 6, 4, 146), (13, 7, 4, 4),
    (13, 8, 3, 27), (13, 9, 2, 619), (13, 10, 2, 103), (13, 11, 2, 5), (13, 12, 2, 1),
    (14, 2, 9, 1), (14, 3, 7, 1), (14, 4, 6, 16), (14, 5, 5, 101), (14, 6, 5, 4), (14, 7, 4, 301),
    (14, 8, 4, 8), (14, 9, 3, 31), (14, 10, 2, 1370), (14, 11, 2, 103), (14, 12, 2, 16),
    (14, 13, 1, 7),
    (15, 2, 10, 1), (15, 3, 7, 8), (15, 4, 6, 89), (15, 5, 6, 10), (15, 6, 6, 2), (15, 7, 5, 1),
    (15, 8, 4, 985), (15, 9, 4, 2), (15, 10, 3, 34), (15, 11, 2, 2143), (15, 12, 2, 196),
    (15, 13, 2, 7), (15, 14, 2, 1),
    (16, 2, 10, 2), (16, 3, 8, 1), (16, 4, 7, 7), (16, 5, 6, 283), (16, 6, 6, 60),
    (16, 7, 5, 1596), (16, 8, 5, 1), (16, 9, 4, 1772), (16, 10, 4, 7), (16, 11, 3, 34),
    (16, 12, 2, 4389), (16, 13, 2, 196), (16, 14, 2, 20), (16, 15, 1, 8),
];

pub fn lookup(n: usize, k: usize) -> Option<(usize, usize)> {
    TABLE.iter().find(|&&(tn, tk, _, _)| tn == n && tk == k).map(|&(_, _, d, c)| (d, c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covers_every_cell_once() {
        let mut cells = 0;
        for n in 3..=16 {
            for k in 2..n {
                assert!(lookup(n, k).is_some(), "missing ({n},{k})");
                cells += 1;
            }
        }
        assert_eq!(TABLE.len(), cells);
    }
}
