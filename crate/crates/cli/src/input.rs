use std::fs::File;
use std::io::Read;
use std::path::Path;

use annuli::Point;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

/// Points from CSV text: one `x,y` per line, `#` comment lines and blank
/// lines ignored, LF or CRLF endings.
pub fn parse_points(text: impl Read) -> Result<Vec<Point>, CliError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text);
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line());
            CliError::Input(format!("line {line}: {e}"))
        })?;
        let line = record.position().map_or(0, |p| p.line());
        if record.len() == 1 && record[0].is_empty() {
            continue;
        }
        if record.len() != 2 {
            return Err(CliError::Input(format!("line {line}: expected \"x,y\", got {} fields", record.len())));
        }
        let coord = |s: &str| {
            let v: f64 = s.parse().map_err(|_| CliError::Input(format!("line {line}: not a number: {s:?}")))?;
            if v.is_finite() {
                Ok(v)
            } else {
                Err(CliError::Input(format!("line {line}: non-finite coordinate {s:?}")))
            }
        };
        points.push(Point::new(coord(&record[0])?, coord(&record[1])?));
    }
    Ok(points)
}

pub fn read_points(path: &Path) -> Result<Vec<Point>, CliError> {
    let file = File::open(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_points(file)
}

/// `n` points drawn uniformly from the unit square.
pub fn random_points(n: usize, seed: u64) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| Point::new(rng.random_range(0.0..1.0), rng.random_range(0.0..1.0))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_blank_lines_and_crlf() {
        let text = "# corners\r\n0,0\r\n\r\n1, 0\r\n 1,1\n0,1\n";
        let p = parse_points(text.as_bytes()).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p[1], Point::new(1.0, 0.0));
    }

    #[test]
    fn bad_line_is_named() {
        let err = parse_points("0,0\n1,x\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = parse_points("0,0\n1,2,3\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
    }

    #[test]
    fn non_finite_is_rejected() {
        for bad in ["NaN,0", "0,inf", "1e400,0"] {
            assert!(matches!(parse_points(bad.as_bytes()), Err(CliError::Input(_))), "{bad}");
        }
    }

    #[test]
    fn random_points_are_reproducible() {
        assert_eq!(random_points(5, 3), random_points(5, 3));
        assert_ne!(random_points(5, 3), random_points(5, 4));
    }
}
