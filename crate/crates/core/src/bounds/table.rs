//! Tables of `C_{r,m}^n` over parameter ranges.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::c_bound::c_bound;
use crate::error::Error;
use crate::limits::Limits;

/// One cell; `value` is `None` when the bound exceeds a limit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub r: u64,
    pub m: usize,
    pub n: u64,
    #[serde(with = "option_decimal")]
    pub value: Option<BigUint>,
}

mod option_decimal {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigUint>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_str(&x.to_str_radix(10)),
            None => s.serialize_str(super::LIMIT_CELL),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigUint>, D::Error> {
        let text = String::deserialize(d)?;
        if text == super::LIMIT_CELL {
            Ok(None)
        } else {
            text.parse().map(Some).map_err(D::Error::custom)
        }
    }
}

/// Rendering of a cell whose value exceeds a limit.
pub const LIMIT_CELL: &str = ">LIMIT";

impl TableRow {
    pub fn cell(&self) -> String {
        self.value.as_ref().map_or_else(|| LIMIT_CELL.to_string(), |v| v.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Markdown,
}

/// The cross product `rs × ms × ns`, in that nesting order.
pub fn c_table(rs: &[u64], ms: &[usize], ns: &[u64], limits: &Limits) -> Result<Vec<TableRow>, Error> {
    let mut rows = Vec::new();
    for &r in rs {
        for &m in ms {
            for &n in ns {
                let value = match c_bound(&BigUint::from(r), m, n, limits) {
                    Ok(report) => Some(report.value),
                    Err(Error::ValueExceedsLimit { .. } | Error::BudgetExceeded { .. }) => None,
                    Err(e) => return Err(e),
                };
                rows.push(TableRow { r, m, n, value });
            }
        }
    }
    Ok(rows)
}

pub fn render(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Csv => {
            let mut out = String::from("r,m,n,C\n");
            for row in rows {
                out += &format!("{},{},{},{}\n", row.r, row.m, row.n, row.cell());
            }
            out
        }
        TableFormat::Json => serde_json::to_string_pretty(rows).expect("rows serialize") + "\n",
        TableFormat::Markdown => {
            let mut out = String::from("| r | m | n | C |\n|---|---|---|---|\n");
            for row in rows {
                out += &format!("| {} | {} | {} | {} |\n", row.r, row.m, row.n, row.cell());
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cells(rows: &[TableRow]) -> Vec<String> {
        rows.iter().map(TableRow::cell).collect()
    }

    #[test]
    fn known_rows() {
        let limits = Limits::default();
        assert_eq!(cells(&c_table(&[1, 2, 3], &[2], &[1], &limits).unwrap()), ["2", "4", "6"]);
        assert_eq!(cells(&c_table(&[1, 2, 3], &[3], &[1], &limits).unwrap()), ["3", "9", "21"]);
        assert_eq!(cells(&c_table(&[1], &[2], &[1, 2, 3], &limits).unwrap()), ["2", "4", "8"]);
        assert_eq!(cells(&c_table(&[3], &[6], &[1], &limits).unwrap()), [LIMIT_CELL]);
    }

    #[test]
    fn formats() {
        let rows = c_table(&[1], &[2, 7], &[1], &Limits::default()).unwrap();
        assert_eq!(render(&rows, TableFormat::Csv), "r,m,n,C\n1,2,1,2\n1,7,1,>LIMIT\n");
        let back: Vec<TableRow> = serde_json::from_str(&render(&rows, TableFormat::Json)).unwrap();
        assert_eq!(back, rows);
        assert!(render(&rows, TableFormat::Markdown).contains("| 1 | 7 | 1 | >LIMIT |"));
    }
}
