//! Zero-set files.
//!
//! Plain CSV is one point per line, `re,im,mult` with `mult` optional
//! (default 1). Lines starting with `#` are comments and an optional
//! `re,im,mult` header is skipped. A file whose header is
//! `re_base,delta_log3,im,mult` is in offset form: each row denotes the point
//! `re_base - 3^delta_log3`. JSON input is an array of `{re, im, mult}`.

use std::io::{Read, Write};

use csv::{ReaderBuilder, Trim};

use super::{StripPoint, ZeroSet};
use crate::error::{Error, Result};
use crate::fmt17;

pub const DELTA_HEADER: &str = "re_base,delta_log3,im,mult";

#[derive(Clone, Copy, PartialEq)]
enum Layout {
    Plain,
    Delta,
}

fn parse_field(field: &str, name: &str, line: usize) -> Result<f64> {
    field.parse::<f64>().map_err(|_| Error::Parse {
        line,
        message: format!("bad {name} value {field:?}"),
    })
}

fn parse_mult(field: Option<&str>, line: usize) -> Result<u32> {
    match field {
        None | Some("") => Ok(1),
        Some(s) => match s.parse::<u32>() {
            Ok(m) if m >= 1 => Ok(m),
            _ => Err(Error::Parse {
                line,
                message: format!("bad multiplicity {s:?}"),
            }),
        },
    }
}

/// Parses the CSV zero-set format (plain or offset form). An input with no
/// points is an error.
pub fn load_zero_set<R: Read>(source: R) -> Result<ZeroSet> {
    let mut reader = ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(Trim::All)
        .from_reader(source);

    let mut layout = Layout::Plain;
    let mut points = Vec::new();
    let mut first = true;
    for record in reader.records() {
        let record = record.map_err(|e| Error::Parse {
            line: e.position().map(|p| p.line() as usize).unwrap_or(0),
            message: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line() as usize).unwrap_or(0);
        if record.iter().all(|f| f.is_empty()) {
            continue;
        }
        if first {
            first = false;
            let joined: Vec<&str> = record.iter().collect();
            match joined.join(",").as_str() {
                DELTA_HEADER => {
                    layout = Layout::Delta;
                    continue;
                }
                "re,im,mult" | "re,im" => continue,
                _ => {}
            }
        }
        let point = match layout {
            Layout::Plain => {
                if record.len() < 2 || record.len() > 3 {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected 2 or 3 fields, got {}", record.len()),
                    });
                }
                StripPoint {
                    re: parse_field(&record[0], "re", line)?,
                    im: parse_field(&record[1], "im", line)?,
                    mult: parse_mult(record.get(2), line)?,
                }
            }
            Layout::Delta => {
                if record.len() < 3 || record.len() > 4 {
                    return Err(Error::Parse {
                        line,
                        message: format!("expected 3 or 4 fields, got {}", record.len()),
                    });
                }
                let base = parse_field(&record[0], "re_base", line)?;
                let delta_log3 = parse_field(&record[1], "delta_log3", line)?;
                StripPoint {
                    re: base - 3f64.powf(delta_log3),
                    im: parse_field(&record[2], "im", line)?,
                    mult: parse_mult(record.get(3), line)?,
                }
            }
        };
        if !(point.im > 0.0) {
            return Err(Error::NonPositiveIm {
                line,
                value: point.im,
            });
        }
        if !point.re.is_finite() || !point.im.is_finite() {
            return Err(Error::Parse {
                line,
                message: "non-finite coordinate".into(),
            });
        }
        points.push(point);
    }
    if points.is_empty() {
        return Err(Error::Input("no points in zero-set input".into()));
    }
    ZeroSet::new(points)
}

/// Convenience wrapper over [`load_zero_set`] for in-memory text.
pub fn parse_zero_set(text: &str) -> Result<ZeroSet> {
    load_zero_set(text.as_bytes())
}

pub fn load_zero_set_json<R: Read>(source: R) -> Result<ZeroSet> {
    let points: Vec<StripPoint> = serde_json::from_reader(source)?;
    for (k, p) in points.iter().enumerate() {
        if !(p.im > 0.0) {
            return Err(Error::NonPositiveIm {
                line: k + 1,
                value: p.im,
            });
        }
    }
    if points.is_empty() {
        return Err(Error::Input("no points in zero-set input".into()));
    }
    ZeroSet::new(points)
}

/// Writes `re,im,mult` rows with 17 significant digits.
pub fn write_zero_set_csv<W: Write>(zs: &ZeroSet, mut out: W) -> Result<()> {
    writeln!(out, "re,im,mult")?;
    for p in zs.points() {
        writeln!(out, "{},{},{}", fmt17(p.re), fmt17(p.im), p.mult)?;
    }
    Ok(())
}

pub fn write_zero_set_json<W: Write>(zs: &ZeroSet, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, zs.points())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_two_points() {
        let zs = parse_zero_set("1.0,1.0,1\n2.0,1.0,1").unwrap();
        assert_eq!(zs.len(), 2);
        assert_eq!(zs.alpha(), Some(1.0));
        assert_eq!(zs.beta(), Some(1.0));
    }

    #[test]
    fn rejects_real_zero() {
        let err = parse_zero_set("1.0,0.0,1").unwrap_err();
        assert!(err.to_string().contains("im must be positive"), "{err}");
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn sorts_on_load() {
        let zs = parse_zero_set("3.0,2.0,1\n1.0,1.0,2").unwrap();
        assert_eq!(zs.points()[0].re, 1.0);
        assert_eq!(zs.points()[0].mult, 2);
    }

    #[test]
    fn comments_header_and_default_multiplicity() {
        let zs = parse_zero_set("# zeros\nre,im,mult\n0.5,2\n# trailing\n1.5,3,4\n").unwrap();
        assert_eq!(zs.total_multiplicity(), 5);
    }

    #[test]
    fn parse_error_carries_line_number() {
        match parse_zero_set("1,1\n2,x\n").unwrap_err() {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            e => panic!("unexpected {e}"),
        }
    }

    #[test]
    fn empty_input_is_an_input_error() {
        assert_eq!(parse_zero_set("# nothing\n").unwrap_err().exit_code(), 2);
    }

    #[test]
    fn offset_form() {
        let zs = parse_zero_set("re_base,delta_log3,im,mult\n243,-1,1,1\n").unwrap();
        assert!((zs.points()[0].re - (243.0 - 1.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn json_input() {
        let zs = load_zero_set_json(r#"[{"re": 1.0, "im": 2.0}, {"re": 0.0, "im": 1.0, "mult": 3}]"#.as_bytes())
            .unwrap();
        assert_eq!(zs.total_multiplicity(), 4);
        assert!(load_zero_set_json(r#"[{"re": 1.0, "im": -2.0}]"#.as_bytes()).is_err());
    }

    proptest! {
        #[test]
        fn csv_and_json_round_trip_bit_exact(
            pts in prop::collection::vec((-1e6f64..1e6, 1e-3f64..1e3, 1u32..5), 1..30)
        ) {
            let zs = ZeroSet::new(
                pts.iter().map(|&(re, im, mult)| StripPoint { re, im, mult }).collect()
            ).unwrap();
            let mut buf = Vec::new();
            write_zero_set_csv(&zs, &mut buf).unwrap();
            prop_assert_eq!(&load_zero_set(buf.as_slice()).unwrap(), &zs);

            let mut buf = Vec::new();
            write_zero_set_json(&zs, &mut buf).unwrap();
            prop_assert_eq!(&load_zero_set_json(buf.as_slice()).unwrap(), &zs);
        }
    }
}
