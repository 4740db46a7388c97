//! Exact rank over the rationals via fraction-free sparse elimination.

use alloc::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Coeff;

/// Sparse integer row keyed by column.
pub type SparseRow = BTreeMap<usize, BigInt>;

/// Row echelon form with pivots at each row's largest column.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the stored pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        row.retain(|_, v| !v.is_zero());
        while let Some((&col, lead)) = row.last_key_value() {
            let Some(pivot) = self.rows.get(&col) else { break };
            let p = &pivot[&col];
            let g = lead.gcd(p);
            let (a, b) = (p / &g, lead / &g);
            let mut next = SparseRow::new();
            for (c, v) in &row {
                next.insert(*c, v * &a);
            }
            for (c, v) in pivot {
                let e = next.entry(*c).or_insert_with(BigInt::zero);
                *e -= v * &b;
            }
            next.retain(|_, v| !v.is_zero());
            row = primitive(next);
        }
        row
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let row = self.reduce(row);
        match row.last_key_value() {
            Some((&col, _)) => {
                self.rows.insert(col, row);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Divides out the content and makes the pivot positive.
fn primitive(mut row: SparseRow) -> SparseRow {
    let mut g = BigInt::zero();
    for v in row.values() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    let negative = row.last_key_value().is_some_and(|(_, v)| v.is_negative());
    if g.is_zero() {
        return row;
    }
    if negative {
        g = -g;
    }
    if !g.is_one() {
        for v in row.values_mut() {
            *v /= &g;
        }
    }
    row
}

/// Integer row proportional to the given rational entries.
pub fn integer_row<'a>(entries: impl IntoIterator<Item = (usize, &'a Coeff)>) -> SparseRow {
    let entries: alloc::vec::Vec<(usize, &Coeff)> = entries.into_iter().collect();
    let lcm = entries.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let row = entries
        .into_iter()
        .map(|(col, c)| (col, c.numer() * (&lcm / c.denom())))
        .filter(|(_, v)| !v.is_zero())
        .collect();
    primitive(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, BigInt::from(v))).collect()
    }

    #[test]
    fn rank_of_small_matrices() {
        let mut e = Echelon::new();
        assert!(e.insert(row(&[(0, 1), (1, 2)])));
        assert!(e.insert(row(&[(0, 2), (1, 1)])));
        assert!(!e.insert(row(&[(0, 5), (1, 7)])));
        assert!(!e.insert(row(&[])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(row(&[(1, 3)])));
    }

    #[test]
    fn rational_rows() {
        let half = Coeff::new(1.into(), 2.into());
        let third = Coeff::new((-1).into(), 3.into());
        assert_eq!(integer_row([(0, &half), (4, &third)]), row(&[(0, -3), (4, 2)]));
    }
}
