//! Golden tables shipped with the crate.
//!
//! Tables 2, 3 and 4 are grids keyed by `(c, n)`; Table 1 lists, for
//! `c = 2, n = 3`, the permutations with each value of `inv_c` and of
//! `tilde_inv_c`. Table 3 is known to be misaligned and is never ground truth.

use colmahon_core::{ColoredPermutation, ExactInt, StatisticKind};

pub const TABLE1: &str = include_str!("../fixtures/table1.csv");
pub const TABLE2: &str = include_str!("../fixtures/table2.csv");
pub const TABLE3: &str = include_str!("../fixtures/table3.csv");
pub const TABLE4: &str = include_str!("../fixtures/table4.csv");

/// Colors and size of the Table 1 group.
pub const TABLE1_C: usize = 2;
pub const TABLE1_N: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub c: usize,
    pub n: usize,
    pub value: ExactInt,
    pub source_table: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListedPermutation {
    pub k: u64,
    pub statistic: StatisticKind,
    pub permutation: ColoredPermutation,
}

fn records(text: &str) -> impl Iterator<Item = csv::StringRecord> + '_ {
    csv::Reader::from_reader(text.as_bytes())
        .into_records()
        .map(|r| r.expect("embedded fixture is valid CSV"))
}

/// Parses a `c,n,value,source_table` grid.
pub fn parse_grid(text: &str) -> Vec<GridCell> {
    records(text)
        .map(|r| GridCell {
            c: r[0].parse().expect("fixture c"),
            n: r[1].parse().expect("fixture n"),
            value: r[2].parse().expect("fixture value"),
            source_table: r[3].to_string(),
        })
        .collect()
}

/// Grid for table 2, 3 or 4.
pub fn grid(which: u8) -> Vec<GridCell> {
    match which {
        2 => parse_grid(TABLE2),
        3 => parse_grid(TABLE3),
        4 => parse_grid(TABLE4),
        _ => panic!("no grid fixture for table {which}"),
    }
}

pub fn table1() -> Vec<ListedPermutation> {
    records(TABLE1)
        .map(|r| ListedPermutation {
            k: r[0].parse().expect("fixture k"),
            statistic: r[1].parse().expect("fixture statistic"),
            permutation: ColoredPermutation::parse_exact(&r[2], TABLE1_C, TABLE1_N)
                .expect("fixture permutation"),
        })
        .collect()
}
