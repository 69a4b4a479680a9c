//! Matrix file formats.
//!
//! JSON: `{"rows": n, "cols": n, "data": [[re, im], ...]}` with `data` in
//! row-major order of length `rows * cols`.
//!
//! CSV: one line per row, entries formatted `a+bi` (the imaginary unit is a
//! trailing `i`, signs attach to the parts, e.g. `1.5-2i`, `-3i`, `4`).

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cmatrix::CMatrix;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 2]>,
}

impl From<&CMatrix> for MatrixFile {
    fn from(m: &CMatrix) -> Self {
        MatrixFile {
            rows: m.rows(),
            cols: m.cols(),
            data: m.data().iter().map(|z| [z.re, z.im]).collect(),
        }
    }
}

pub fn matrix_to_json(m: &CMatrix) -> String {
    serde_json::to_string(&MatrixFile::from(m)).expect("matrix serialization cannot fail")
}

pub fn matrix_from_json(text: &str) -> Result<CMatrix> {
    let file: MatrixFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(format!("matrix JSON: {e}")))?;
    if file.data.len() != file.rows * file.cols {
        return Err(Error::parse(format!(
            "matrix JSON: data length {} does not match {}x{}",
            file.data.len(),
            file.rows,
            file.cols
        )));
    }
    let entries = file.data.iter().map(|[re, im]| Complex64::new(*re, *im)).collect();
    CMatrix::from_vec(file.rows, file.cols, entries)
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", z.re, -z.im)
    } else {
        format!("{}+{}i", z.re, z.im)
    }
}

/// Parse `a+bi` style strings. Accepts a pure real part, a pure imaginary
/// part (`2i`, `-i`), or both; exponent notation inside the parts is fine.
pub fn parse_complex(text: &str) -> Result<Complex64> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::parse("empty complex literal"));
    }
    if let Some(body) = s.strip_suffix(['i', 'I']) {
        // Find the sign splitting real and imaginary parts. Skip position 0
        // and signs that belong to an exponent.
        let bytes = body.as_bytes();
        let mut split = None;
        for pos in (1..bytes.len()).rev() {
            let b = bytes[pos];
            if (b == b'+' || b == b'-') && !matches!(bytes[pos - 1], b'e' | b'E') {
                split = Some(pos);
                break;
            }
        }
        match split {
            Some(pos) => {
                let re: f64 = body[..pos]
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(format!("bad real part in '{s}'")))?;
                let imag_str = body[pos..].trim();
                let im: f64 = match imag_str {
                    "+" => 1.0,
                    "-" => -1.0,
                    _ => imag_str
                        .parse()
                        .map_err(|_| Error::parse(format!("bad imaginary part in '{s}'")))?,
                };
                Ok(Complex64::new(re, im))
            }
            None => {
                let body = body.trim();
                let im: f64 = match body {
                    "" | "+" => 1.0,
                    "-" => -1.0,
                    _ => body
                        .parse()
                        .map_err(|_| Error::parse(format!("bad imaginary part in '{s}'")))?,
                };
                Ok(Complex64::new(0.0, im))
            }
        }
    } else {
        let re: f64 = s.parse().map_err(|_| Error::parse(format!("bad complex literal '{s}'")))?;
        Ok(Complex64::new(re, 0.0))
    }
}

pub fn matrix_to_csv(m: &CMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let line: Vec<String> = (0..m.cols()).map(|j| format_complex(m[(i, j)])).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(text: &str) -> Result<CMatrix> {
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let row: Result<Vec<Complex64>> = line
            .split(',')
            .map(|cell| {
                parse_complex(cell).map_err(|e| Error::parse(format!("line {}: {e}", lineno + 1)))
            })
            .collect();
        rows.push(row?);
    }
    if rows.is_empty() {
        return Err(Error::EmptyInput { what: "matrix CSV" });
    }
    CMatrix::from_rows(rows)
}
