//! Plain-text matrix file format, shared between the generator and the CLI.
//!
//! Layout: a header line `dim n`, then `n` lines of `n` whitespace-separated
//! complex entries written as `a+bi` / `a-bi`. Parts are printed as the
//! shortest decimal that round-trips the exact `f64` (at most 17 significant
//! digits), so writer and reader round-trip bit-exactly.
//!
//! ```text
//! dim 2
//! 0.75+0i 0+0i
//! 0+0i 0.25+0i
//! ```

use crate::linalg::ComplexMatrix;
use crate::{Complex64, Error, Result};
use std::io::{BufRead, Write};
use std::path::Path;

/// Format one complex entry as `a+bi` / `a-bi`.
pub fn format_complex(z: Complex64) -> String {
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

/// Parse one `a+bi` / `a-bi` entry.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let body = s.strip_suffix('i')?;
    // split at the sign of the imaginary part: the last '+'/'-' that is
    // neither the leading sign nor part of an exponent
    let split = body
        .char_indices()
        .rev()
        .find(|&(idx, ch)| {
            (ch == '+' || ch == '-') && idx != 0 && !matches!(body.as_bytes()[idx - 1], b'e' | b'E')
        })?
        .0;
    let re: f64 = body[..split].parse().ok()?;
    let im_mag: f64 = body[split + 1..].parse().ok()?;
    if !re.is_finite() || !im_mag.is_finite() {
        return None;
    }
    let im = if body.as_bytes()[split] == b'-' {
        -im_mag
    } else {
        im_mag
    };
    Some(Complex64::new(re, im))
}

/// Write a matrix in the text format.
pub fn write_matrix(w: &mut impl Write, m: &ComplexMatrix) -> std::io::Result<()> {
    writeln!(w, "dim {}", m.dim())?;
    for i in 0..m.dim() {
        for j in 0..m.dim() {
            if j > 0 {
                write!(w, " ")?;
            }
            write!(w, "{}", format_complex(m.get(i, j)))?;
        }
        writeln!(w)?;
    }
    Ok(())
}

/// Read a matrix from the text format, validating shape and finiteness.
pub fn read_matrix(r: &mut impl BufRead) -> Result<ComplexMatrix> {
    let mut lines = r.lines();
    let header = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `dim n` header"))??;
    let dim: usize = header
        .strip_prefix("dim ")
        .and_then(|d| d.trim().parse().ok())
        .ok_or_else(|| parse_err(1, "header must be `dim n`"))?;
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let mut rows: Vec<Vec<Complex64>> = Vec::with_capacity(dim);
    for i in 0..dim {
        let line_no = i + 2;
        let line = lines
            .next()
            .ok_or_else(|| parse_err(line_no, "missing matrix row"))??;
        let row: Vec<Complex64> = line
            .split_whitespace()
            .map(|tok| {
                parse_complex(tok)
                    .ok_or_else(|| parse_err(line_no, &format!("bad complex entry `{tok}`")))
            })
            .collect::<Result<_>>()?;
        if row.len() != dim {
            return Err(parse_err(
                line_no,
                &format!("expected {dim} entries, found {}", row.len()),
            ));
        }
        rows.push(row);
    }
    ComplexMatrix::from_rows(rows)
}

/// Write a matrix to a file path.
pub fn write_matrix_to_path(path: &Path, m: &ComplexMatrix) -> Result<()> {
    let mut f = std::io::BufWriter::new(std::fs::File::create(path)?);
    write_matrix(&mut f, m)?;
    Ok(())
}

/// Read a matrix from a file path.
pub fn read_matrix_from_path(path: &Path) -> Result<ComplexMatrix> {
    let mut f = std::io::BufReader::new(std::fs::File::open(path)?);
    read_matrix(&mut f)
}

fn parse_err(line: usize, message: &str) -> Error {
    Error::Parse {
        line,
        message: message.to_string(),
    }
}
