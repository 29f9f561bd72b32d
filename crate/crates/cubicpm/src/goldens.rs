//! Reference values embedded at build time from the checked-in data files.
//! Everything downstream diffs against these; they are never recomputed.

use std::str::FromStr;
use std::sync::OnceLock;

use crate::series::Int;

#[derive(Debug, Clone)]
pub struct Table1Row {
    /// Number of vertices (2n for size n).
    pub vertices: u64,
    pub matched: Int,
    pub bridgeless: Int,
    pub three_connected: Int,
}

#[derive(Debug, Clone)]
pub struct Table2Row {
    /// Number of labeled vertices.
    pub vertices: u64,
    pub all: Int,
    pub connected: Int,
    pub bridgeless: Int,
}

#[derive(Debug, Clone, Copy)]
pub struct ConstantRow {
    pub name: &'static str,
    pub value: f64,
    pub tolerance: f64,
}

const TABLE1_CSV: &str = include_str!("../data/table1.csv");
const TABLE2_CSV: &str = include_str!("../data/table2.csv");
const CONSTANTS_CSV: &str = include_str!("../data/constants.csv");

fn parse_int(s: &str) -> Int {
    Int::from_str(s.trim()).expect("golden integer")
}

pub fn table1() -> &'static [Table1Row] {
    static ROWS: OnceLock<Vec<Table1Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        TABLE1_CSV
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                Table1Row {
                    vertices: f[0].parse().expect("vertex count"),
                    matched: parse_int(f[1]),
                    bridgeless: parse_int(f[2]),
                    three_connected: parse_int(f[3]),
                }
            })
            .collect()
    })
}

pub fn table2() -> &'static [Table2Row] {
    static ROWS: OnceLock<Vec<Table2Row>> = OnceLock::new();
    ROWS.get_or_init(|| {
        TABLE2_CSV
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                Table2Row {
                    vertices: f[0].parse().expect("vertex count"),
                    all: parse_int(f[1]),
                    connected: parse_int(f[2]),
                    bridgeless: parse_int(f[3]),
                }
            })
            .collect()
    })
}

pub fn constants() -> &'static [ConstantRow] {
    static ROWS: OnceLock<Vec<ConstantRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        CONSTANTS_CSV
            .lines()
            .skip(1)
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                ConstantRow {
                    name: Box::leak(f[0].trim().to_owned().into_boxed_str()),
                    value: f[1].trim().parse().expect("constant value"),
                    tolerance: f[2].trim().parse().expect("constant tolerance"),
                }
            })
            .collect()
    })
}

pub fn constant(name: &str) -> ConstantRow {
    *constants()
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no golden constant named {}", name))
}
