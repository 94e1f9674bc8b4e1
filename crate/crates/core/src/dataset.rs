//! Performance tables: functions as rows, algorithms as columns.

use std::collections::HashSet;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::score::{ObjectiveSense, PerformanceVector};

const CEC05_CSV: &str = include_str!("../data/cec05_dim10.csv");

/// SHA-256 over the little-endian bit patterns of the bundled grid, row-major.
pub const CEC05_DIGEST: &str = "ef40c7bf01533c0ed2244427454c272c6b385cb18bf2093242be6c354a8f9b2d";

#[derive(Debug, Clone, PartialEq)]
pub struct PerformanceMatrix {
    algorithm_names: Vec<String>,
    function_names: Vec<String>,
    /// `values[f][a]`
    values: Vec<Vec<f64>>,
    sense: ObjectiveSense,
}

fn check_unique(kind: &'static str, names: &[String]) -> Result<()> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n.as_str()) {
            return Err(Error::DuplicateName {
                kind,
                name: n.clone(),
            });
        }
    }
    Ok(())
}

impl PerformanceMatrix {
    pub fn new(
        algorithm_names: Vec<String>,
        function_names: Vec<String>,
        values: Vec<Vec<f64>>,
        sense: ObjectiveSense,
    ) -> Result<Self> {
        if algorithm_names.is_empty() || function_names.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        check_unique("algorithm", &algorithm_names)?;
        check_unique("function", &function_names)?;
        if values.len() != function_names.len() {
            return Err(Error::Parse {
                line: 0,
                message: format!(
                    "{} function names but {} value rows",
                    function_names.len(),
                    values.len()
                ),
            });
        }
        for (f, row) in values.iter().enumerate() {
            if row.len() != algorithm_names.len() {
                return Err(Error::Parse {
                    line: f + 2,
                    message: format!(
                        "expected {} values, found {}",
                        algorithm_names.len(),
                        row.len()
                    ),
                });
            }
            for (a, &v) in row.iter().enumerate() {
                if !(v.is_finite() && v > 0.0) {
                    return Err(Error::Cell {
                        line: f + 2,
                        column: a + 2,
                        message: format!("value {v} is not strictly positive"),
                    });
                }
            }
        }
        Ok(PerformanceMatrix {
            algorithm_names,
            function_names,
            values,
            sense,
        })
    }

    pub fn algorithm_names(&self) -> &[String] {
        &self.algorithm_names
    }

    pub fn function_names(&self) -> &[String] {
        &self.function_names
    }

    pub fn algorithm_count(&self) -> usize {
        self.algorithm_names.len()
    }

    pub fn function_count(&self) -> usize {
        self.function_names.len()
    }

    pub fn sense(&self) -> ObjectiveSense {
        self.sense
    }

    pub fn with_sense(mut self, sense: ObjectiveSense) -> Self {
        self.sense = sense;
        self
    }

    pub fn value(&self, function: usize, algorithm: usize) -> f64 {
        self.values[function][algorithm]
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.values
    }

    /// Looks a cell up by names.
    pub fn cell(&self, function: &str, algorithm: &str) -> Option<f64> {
        let f = self.function_names.iter().position(|n| n == function)?;
        let a = self.algorithm_names.iter().position(|n| n == algorithm)?;
        Some(self.values[f][a])
    }

    /// One algorithm's results over all functions.
    pub fn column(&self, algorithm: usize) -> PerformanceVector {
        PerformanceVector::new(self.values.iter().map(|row| row[algorithm]).collect())
            .expect("matrix values are validated positive")
    }

    /// Swaps the roles of functions and algorithms.
    pub fn transposed(&self) -> Self {
        let values = (0..self.algorithm_count())
            .map(|a| self.values.iter().map(|row| row[a]).collect())
            .collect();
        PerformanceMatrix {
            algorithm_names: self.function_names.clone(),
            function_names: self.algorithm_names.clone(),
            values,
            sense: self.sense,
        }
    }

    /// Hex SHA-256 of the grid values, row-major, as little-endian bits.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        for row in &self.values {
            for v in row {
                h.update(v.to_bits().to_le_bytes());
            }
        }
        h.finalize().iter().map(|b| format!("{b:02x}")).collect()
    }

    /// Writes the matrix in the same layout [`parse_performance_csv`] reads.
    ///
    /// Values use the shortest representation that parses back to the same
    /// float, so a round trip is exact.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let mut header = vec!["function".to_string()];
        header.extend(self.algorithm_names.iter().cloned());
        w.write_record(&header).expect("writing to memory");
        for (name, row) in self.function_names.iter().zip(&self.values) {
            let mut rec = vec![name.clone()];
            rec.extend(row.iter().map(|v| format!("{v:?}")));
            w.write_record(&rec).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 input")
    }
}

fn parse_value(cell: &str) -> Option<f64> {
    let t = cell.trim();
    // Rust's float parser accepts "inf"/"nan"; benchmark tables never should.
    if t.is_empty()
        || !t
            .bytes()
            .all(|b| b.is_ascii_digit() || b"+-.eE".contains(&b))
    {
        return None;
    }
    t.parse().ok()
}

/// Parses a comma-separated performance table.
///
/// The header's first cell is ignored (conventionally `function`); the rest
/// name the algorithms. Each further row is a function name followed by one
/// value per algorithm. Blank lines are skipped. With `transpose`, rows are
/// read as algorithms and columns as functions instead.
pub fn parse_performance_csv(
    text: &str,
    sense: ObjectiveSense,
    transpose: bool,
) -> Result<PerformanceMatrix> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut header: Option<Vec<String>> = None;
    let mut row_names = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map_or(0, |p| p.line() as usize),
            message: e.to_string(),
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let Some(names) = &header else {
            if record.len() < 2 {
                return Err(Error::Parse {
                    line,
                    message: "header needs at least one column name".into(),
                });
            }
            header = Some(record.iter().skip(1).map(str::to_string).collect());
            continue;
        };
        if record.len() != names.len() + 1 {
            return Err(Error::Parse {
                line,
                message: format!(
                    "ragged row: expected {} cells, found {}",
                    names.len() + 1,
                    record.len()
                ),
            });
        }
        row_names.push(record[0].to_string());
        let mut row = Vec::with_capacity(names.len());
        for (c, cell) in record.iter().enumerate().skip(1) {
            let v = parse_value(cell).ok_or_else(|| Error::Cell {
                line,
                column: c + 1,
                message: format!("not a number: {cell:?}"),
            })?;
            if v <= 0.0 {
                return Err(Error::Cell {
                    line,
                    column: c + 1,
                    message: format!("value {cell} is not strictly positive"),
                });
            }
            row.push(v);
        }
        values.push(row);
    }
    let header = header.ok_or(Error::EmptyMatrix)?;
    let matrix = PerformanceMatrix::new(header, row_names, values, sense)?;
    Ok(if transpose {
        matrix.transposed()
    } else {
        matrix
    })
}

/// CEC'05 dimension-10 average errors for 25 functions and 11 algorithms.
pub fn bundled_cec05() -> PerformanceMatrix {
    parse_performance_csv(CEC05_CSV, ObjectiveSense::Minimize, false)
        .expect("bundled CEC'05 table is valid")
}

/// Raw text of the bundled table.
pub fn bundled_cec05_csv() -> &'static str {
    CEC05_CSV
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_shape_and_cells() {
        let m = bundled_cec05();
        assert_eq!(m.function_count(), 25);
        assert_eq!(m.algorithm_count(), 11);
        assert_eq!(m.sense(), ObjectiveSense::Minimize);
        assert_eq!(
            m.algorithm_names(),
            [
                "BLX-GL50",
                "BLX-MA",
                "CoEVO",
                "DE",
                "DMS-L-PSO",
                "EDA",
                "G-CMA-ES",
                "K-PCX",
                "L-CMA-ES",
                "L-SaDE",
                "SPC-PNX"
            ]
        );
        assert_eq!(m.cell("f3", "BLX-GL50"), Some(5.71e2));
        assert_eq!(m.cell("f24", "L-CMA-ES"), Some(865.0));
        assert_eq!(m.cell("f8", "DMS-L-PSO"), Some(20.0));
        assert_eq!(m.cell("f5", "CoEVO"), Some(2.133));
        for f in ["f1", "f2"] {
            for a in m.algorithm_names() {
                assert_eq!(m.cell(f, a), Some(1.00e-9));
            }
        }
        assert_eq!(m.rows().iter().map(Vec::len).sum::<usize>(), 275);
        assert_eq!(m.digest(), CEC05_DIGEST);
    }

    #[test]
    fn minimal_table() {
        let m =
            parse_performance_csv("function,A\nf1,1.0\n", ObjectiveSense::Minimize, false).unwrap();
        assert_eq!(m.function_count(), 1);
        assert_eq!(m.algorithm_count(), 1);
        assert_eq!(m.value(0, 0), 1.0);
    }

    #[test]
    fn blank_lines_and_exponents() {
        let text = "\n,A,B\n\nf1, 1.5e-3 ,2E+02\n\nf2,3,4.0\n\n";
        let m = parse_performance_csv(text, ObjectiveSense::Maximize, false).unwrap();
        assert_eq!(m.rows(), &[vec![1.5e-3, 200.0], vec![3.0, 4.0]]);
        assert_eq!(m.sense(), ObjectiveSense::Maximize);
    }

    #[test]
    fn rejects_zero_with_coordinates() {
        let err = parse_performance_csv("function,A,B\nf1,1,0\n", ObjectiveSense::Minimize, false)
            .unwrap_err();
        assert!(
            matches!(
                err,
                Error::Cell {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err:?}"
        );
        let err = parse_performance_csv("function,A\nf1,-2\n", ObjectiveSense::Minimize, false)
            .unwrap_err();
        assert!(
            matches!(
                err,
                Error::Cell {
                    line: 2,
                    column: 2,
                    ..
                }
            ),
            "{err:?}"
        );
    }

    #[test]
    fn rejects_non_numeric_and_ragged() {
        let err = parse_performance_csv("function,A,B\nf1,1,x\n", ObjectiveSense::Minimize, false)
            .unwrap_err();
        assert!(
            matches!(
                err,
                Error::Cell {
                    line: 2,
                    column: 3,
                    ..
                }
            ),
            "{err:?}"
        );
        let err =
            parse_performance_csv("function,A,B\nf1,1,inf\n", ObjectiveSense::Minimize, false)
                .unwrap_err();
        assert!(matches!(err, Error::Cell { .. }), "{err:?}");
        let err = parse_performance_csv(
            "function,A,B\nf1,1,2\nf2,1\n",
            ObjectiveSense::Minimize,
            false,
        )
        .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        let err = parse_performance_csv("function,A,A\nf1,1,2\n", ObjectiveSense::Minimize, false)
            .unwrap_err();
        assert_eq!(
            err,
            Error::DuplicateName {
                kind: "algorithm",
                name: "A".into()
            }
        );
        let err =
            parse_performance_csv("function,A\nf1,1\nf1,2\n", ObjectiveSense::Minimize, false)
                .unwrap_err();
        assert!(matches!(
            err,
            Error::DuplicateName {
                kind: "function",
                ..
            }
        ));
        assert_eq!(
            parse_performance_csv("", ObjectiveSense::Minimize, false),
            Err(Error::EmptyMatrix)
        );
        assert_eq!(
            parse_performance_csv("function,A\n", ObjectiveSense::Minimize, false),
            Err(Error::EmptyMatrix)
        );
    }

    #[test]
    fn transpose_flag() {
        let text = "algorithm,f1,f2\nA,1,2\nB,3,4\nC,5,6\n";
        let m = parse_performance_csv(text, ObjectiveSense::Minimize, true).unwrap();
        assert_eq!(m.algorithm_names(), ["A", "B", "C"]);
        assert_eq!(m.function_names(), ["f1", "f2"]);
        assert_eq!(m.cell("f2", "B"), Some(4.0));
    }

    #[test]
    fn bundled_round_trip() {
        let m = bundled_cec05();
        let again = parse_performance_csv(&m.to_csv(), m.sense(), false).unwrap();
        assert_eq!(again, m);
    }
}
