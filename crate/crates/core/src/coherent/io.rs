use crate::error::{Error, Result};
use crate::exact::Matrix;

/// A parsed matrix file: an `n1 × n2` incidence matrix or an `n × n`
/// adjacency matrix (header `n 0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatrixInput {
    Incidence(Matrix<i64>),
    Adjacency(Matrix<i64>),
}

impl MatrixInput {
    pub fn matrix(&self) -> &Matrix<i64> {
        match self {
            Self::Incidence(m) | Self::Adjacency(m) => m,
        }
    }
}

/// Parses the text matrix format. Lines starting with `#` and blank lines are
/// ignored.
pub fn parse_matrix_text(text: &str) -> Result<MatrixInput> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines
        .next()
        .ok_or_else(|| Error::Input("empty matrix file".into()))?;
    let dims = parse_row(hline, header)?;
    let [a, b] = dims[..] else {
        return Err(Error::Input(format!(
            "line {hline}: header must be two integers"
        )));
    };
    if a < 0 || b < 0 {
        return Err(Error::Input(format!("line {hline}: negative dimension")));
    }
    let (rows, cols, adjacency) = match (a as usize, b as usize) {
        (0, _) => return Err(Error::Input(format!("line {hline}: first fiber is empty"))),
        (n, 0) => (n, n, true),
        (n1, n2) => (n1, n2, false),
    };
    let mut data = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::Input(format!("expected {rows} rows, found {r}")))?;
        let row = parse_row(no, line)?;
        if row.len() != cols {
            return Err(Error::Input(format!(
                "line {no}: expected {cols} entries, found {}",
                row.len()
            )));
        }
        data.extend(row);
    }
    if let Some((no, _)) = lines.next() {
        return Err(Error::Input(format!(
            "line {no}: trailing data after {rows} rows"
        )));
    }
    let m = Matrix::new(rows, cols, data)?;
    Ok(if adjacency {
        MatrixInput::Adjacency(m)
    } else {
        MatrixInput::Incidence(m)
    })
}

fn parse_row(no: usize, line: &str) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|_| Error::Input(format!("line {no}: '{tok}' is not an integer")))
        })
        .collect()
}

pub fn write_matrix_text(input: &MatrixInput) -> String {
    let m = input.matrix();
    let mut out = match input {
        MatrixInput::Incidence(_) => format!("{} {}\n", m.rows(), m.cols()),
        MatrixInput::Adjacency(_) => format!("{} 0\n", m.rows()),
    };
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_incidence_with_comments() {
        let text = "# a 2x3 incidence\n2 3\n1 0 1\n\n# middle\n0 1 1\n";
        let MatrixInput::Incidence(m) = parse_matrix_text(text).unwrap() else {
            panic!("expected incidence");
        };
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert_eq!(m.row(1), &[0, 1, 1]);
    }

    #[test]
    fn parses_adjacency_header() {
        let input = parse_matrix_text("3 0\n0 1 0\n1 0 1\n0 1 0\n").unwrap();
        assert!(matches!(input, MatrixInput::Adjacency(ref m) if m.rows() == 3));
        assert_eq!(
            parse_matrix_text(&write_matrix_text(&input)).unwrap(),
            input
        );
    }

    #[test]
    fn malformed_inputs() {
        for bad in [
            "",
            "2\n",
            "2 2\n1 0\n",
            "2 2\n1 0\n0 x\n",
            "1 2\n1 0 1\n",
            "1 1\n1\n1\n",
            "-1 2\n",
        ] {
            assert!(
                matches!(parse_matrix_text(bad), Err(Error::Input(_))),
                "{bad:?}"
            );
        }
    }
}
