//! Semistandard and standard Young tableaux.

use num_bigint::BigInt;

use crate::error::Result;
use crate::partition::{check_same_size, Partition};
use crate::LaurentPoly;

/// A filling of a Young diagram whose rows weakly increase and whose columns
/// strictly increase. Letters start at 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<u32>>,
    content: Vec<u32>,
}

impl Tableau {
    /// Build from rows, checking the semistandard conditions.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect()).ok()?;
        let rows_ok = rows
            .iter()
            .all(|r| r.windows(2).all(|w| w[0] <= w[1]) && r.iter().all(|&v| v >= 1));
        let cols_ok = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above));
        if !(rows_ok && cols_ok) {
            return None;
        }
        let max = rows.iter().flatten().copied().max().unwrap_or(0);
        let mut content = vec![0; max as usize];
        for &v in rows.iter().flatten() {
            content[v as usize - 1] += 1;
        }
        Some(Tableau {
            shape,
            rows,
            content,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `content()[i]` is the number of occurrences of letter `i + 1`.
    pub fn content(&self) -> &[u32] {
        &self.content
    }

    /// Rows read left to right, starting from the bottom row.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Descents of a standard tableau: `i` such that `i + 1` sits in a
    /// strictly lower row than `i`.
    pub fn descents(&self) -> Vec<u32> {
        let n = self.shape.size() as usize;
        let mut row_of = vec![0usize; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v as usize] = r;
            }
        }
        (1..n)
            .filter(|&i| row_of[i + 1] > row_of[i])
            .map(|i| i as u32)
            .collect()
    }

    pub fn major_index(&self) -> u64 {
        self.descents().iter().map(|&d| d as u64).sum()
    }
}

/// All semistandard tableaux of `shape` in which letter `i` appears
/// `content_i` times.
///
/// Cells are filled in row-major order by backtracking, trying letters in
/// increasing order, so the output is sorted lexicographically by the
/// row-major sequence of entries.
pub fn ssyt_enumerate(shape: &Partition, content: &Partition) -> Result<Vec<Tableau>> {
    check_same_size(shape, content)?;
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let col_len = shape.conjugate();
    let mut search = Search {
        shape,
        content: content.parts(),
        col_len: col_len.parts(),
        cells: &cells,
        remaining: content.parts().to_vec(),
        grid: shape.parts().iter().map(|&l| vec![0; l as usize]).collect(),
        out: Vec::new(),
    };
    search.fill(0);
    Ok(search.out)
}

struct Search<'a> {
    shape: &'a Partition,
    content: &'a [u32],
    col_len: &'a [u32],
    cells: &'a [(usize, usize)],
    remaining: Vec<u32>,
    grid: Vec<Vec<u32>>,
    out: Vec<Tableau>,
}

impl Search<'_> {
    fn fill(&mut self, k: usize) {
        let Some(&(r, c)) = self.cells.get(k) else {
            self.out.push(Tableau {
                shape: self.shape.clone(),
                rows: self.grid.clone(),
                content: self.content.to_vec(),
            });
            return;
        };
        let max_letter = self.content.len() as u32;
        let left = if c > 0 { self.grid[r][c - 1] } else { 1 };
        let above = if r > 0 { self.grid[r - 1][c] + 1 } else { 1 };
        // Cells below in this column need strictly larger letters.
        let below = self.col_len[c] - 1 - r as u32;
        let lo = left.max(above).max(r as u32 + 1);
        let hi = max_letter.saturating_sub(below);
        for v in lo..=hi {
            if self.remaining[v as usize - 1] == 0 {
                continue;
            }
            self.remaining[v as usize - 1] -= 1;
            self.grid[r][c] = v;
            self.fill(k + 1);
            self.remaining[v as usize - 1] += 1;
        }
        self.grid[r][c] = 0;
    }
}

/// Standard Young tableaux of shape `lambda`.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    ssyt_enumerate(lambda, &Partition::column(lambda.size())).expect("sizes agree")
}

/// `sum_T q^{maj(T)}` over standard tableaux of shape `lambda`.
pub fn syt_major_index_genfun(lambda: &Partition) -> LaurentPoly {
    LaurentPoly::from_terms(
        standard_tableaux(lambda)
            .iter()
            .map(|t| (t.major_index() as i64, BigInt::from(1))),
    )
}
