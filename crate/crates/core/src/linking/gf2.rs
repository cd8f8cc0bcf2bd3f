//! Incremental row echelon form over GF(2).

use std::collections::HashSet;

const NO_PIVOT: u32 = u32::MAX;

/// What happened to an inserted equation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Insertion {
    /// Raised the rank.
    Independent,
    /// Reduced to `0 = 0`.
    Dependent,
    /// Identical to an equation seen before; not reduced.
    Duplicate,
    /// Reduced to `0 = 1`; the system has no solution.
    Inconsistent,
}

/// Linear equations over GF(2) in incremental row echelon form.
///
/// Each basis row's pivot is its lowest set column, so reducing a row only
/// ever moves its lowest bit upwards. Columns are plain indices and the
/// width grows with the largest column seen.
#[derive(Debug, Clone, Default)]
pub struct Gf2System {
    basis: Vec<(Vec<u64>, bool)>,
    pivot_row: Vec<u32>,
    seen: HashSet<(Vec<u64>, bool)>,
    columns: usize,
    offered: u64,
    duplicates: u64,
    inconsistent: bool,
}

impl Gf2System {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `sum of x_c over columns = rhs`. A column listed twice cancels.
    pub fn insert(&mut self, columns: &[usize], rhs: bool) -> Insertion {
        let width = columns.iter().map(|&c| c + 1).max().unwrap_or(0);
        let mut row = vec![0u64; width.div_ceil(64)];
        for &c in columns {
            row[c / 64] ^= 1 << (c % 64);
        }
        self.insert_row(row, rhs)
    }

    /// Inserts a packed row; bit `c % 64` of word `c / 64` is column `c`.
    pub fn insert_row(&mut self, mut row: Vec<u64>, rhs: bool) -> Insertion {
        self.offered += 1;
        while row.last() == Some(&0) {
            row.pop();
        }
        self.columns = self.columns.max(row.len() * 64);
        if !self.seen.insert((row.clone(), rhs)) {
            self.duplicates += 1;
            return Insertion::Duplicate;
        }
        let mut rhs = rhs;
        let mut word = 0;
        loop {
            while word < row.len() && row[word] == 0 {
                word += 1;
            }
            if word == row.len() {
                if rhs {
                    self.inconsistent = true;
                    return Insertion::Inconsistent;
                }
                return Insertion::Dependent;
            }
            let col = word * 64 + row[word].trailing_zeros() as usize;
            let r = self.pivot_row.get(col).copied().unwrap_or(NO_PIVOT);
            if r == NO_PIVOT {
                if self.pivot_row.len() <= col {
                    self.pivot_row.resize(col + 1, NO_PIVOT);
                }
                self.pivot_row[col] = self.basis.len() as u32;
                while row.last() == Some(&0) {
                    row.pop();
                }
                self.basis.push((row, rhs));
                return Insertion::Independent;
            }
            let (b, b_rhs) = &self.basis[r as usize];
            if b.len() > row.len() {
                row.resize(b.len(), 0);
            }
            for (x, y) in row[word..].iter_mut().zip(&b[word..]) {
                *x ^= y;
            }
            rhs ^= b_rhs;
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Upper bound on the columns touched so far, rounded up to whole words.
    pub fn columns(&self) -> usize {
        self.columns
    }

    pub fn equations_offered(&self) -> u64 {
        self.offered
    }

    pub fn duplicates(&self) -> u64 {
        self.duplicates
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }
}
