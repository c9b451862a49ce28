//! Line-based text formats for groups and Rees matrix semigroups.
//!
//! Group format:
//!
//! ```text
//! GROUP <n>
//! <n rows of n space-separated element ids>
//! ```
//!
//! Rees matrix format (the group block is embedded verbatim):
//!
//! ```text
//! RMS
//! GROUP <n>
//! <n rows>
//! I <m>
//! LAMBDA <k>
//! <k rows of m space-separated group element ids>   (row λ of P)
//! ```
//!
//! Blank lines are ignored. Parsing separates *syntax* errors (reported with
//! 1-based line and column) from *validation* errors (the structural laws,
//! reported by the constructors in [`crate::group`] and [`crate::rees`]).

use std::path::Path;

use thiserror::Error;

use crate::group::{FiniteGroup, GroupError};
use crate::rees::{ReesError, ReesMatrixSemigroup};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("validation: {0}")]
    Group(#[from] GroupError),
    #[error("validation: {0}")]
    Rees(#[from] ReesError),
    #[error(transparent)]
    File(#[from] std::io::Error),
}

/// Either kind of loadable object, for format-sniffing entry points.
#[derive(Clone, Debug)]
pub enum Artifact {
    Group(FiniteGroup),
    Rms(ReesMatrixSemigroup),
}

/// Non-blank lines with their 1-based line numbers.
struct LineReader<'a> {
    lines: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> LineReader<'a> {
    fn new(text: &'a str) -> Self {
        Self { lines: text.lines().enumerate() }
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (ix, raw) in self.lines.by_ref() {
            if !raw.trim().is_empty() {
                return Some((ix + 1, raw));
            }
        }
        None
    }

    fn expect_line(&mut self, what: &str) -> Result<(usize, &'a str), IoError> {
        self.next_line().ok_or_else(|| IoError::Parse {
            line: 0,
            column: 0,
            message: format!("unexpected end of input; expected {what}"),
        })
    }
}

/// 1-based column of the `ix`-th whitespace token of `raw`, for error spans.
fn token_column(raw: &str, ix: usize) -> usize {
    let mut seen = 0usize;
    let mut in_token = false;
    for (pos, ch) in raw.char_indices() {
        if ch.is_whitespace() {
            in_token = false;
        } else if !in_token {
            in_token = true;
            if seen == ix {
                return pos + 1;
            }
            seen += 1;
        }
    }
    raw.len() + 1
}

fn parse_usize(line: usize, raw: &str, ix: usize, token: &str) -> Result<usize, IoError> {
    token.parse::<usize>().map_err(|_| IoError::Parse {
        line,
        column: token_column(raw, ix),
        message: format!("expected a non-negative integer, found {token:?}"),
    })
}

/// Parses a `<KEYWORD> <count>` header line.
fn parse_header(line: usize, raw: &str, keyword: &str) -> Result<usize, IoError> {
    let tokens: Vec<&str> = raw.split_whitespace().collect();
    if tokens.first() != Some(&keyword) {
        return Err(IoError::Parse {
            line,
            column: token_column(raw, 0),
            message: format!("expected {keyword:?}, found {:?}", tokens.first().unwrap_or(&"")),
        });
    }
    if tokens.len() != 2 {
        return Err(IoError::Parse {
            line,
            column: token_column(raw, tokens.len().min(2)),
            message: format!("expected {keyword:?} followed by one count, found {} tokens", tokens.len()),
        });
    }
    parse_usize(line, raw, 1, tokens[1])
}

/// Parses a row of exactly `width` integers.
fn parse_row(line: usize, raw: &str, width: usize) -> Result<Vec<usize>, IoError> {
    let tokens: Vec<&str> = raw.split_whitespace().collect();
    if tokens.len() != width {
        return Err(IoError::Parse {
            line,
            column: token_column(raw, tokens.len().min(width)),
            message: format!("expected {width} entries, found {}", tokens.len()),
        });
    }
    tokens
        .iter()
        .enumerate()
        .map(|(ix, token)| parse_usize(line, raw, ix, token))
        .collect()
}

fn parse_group_block(reader: &mut LineReader<'_>) -> Result<FiniteGroup, IoError> {
    let (line, raw) = reader.expect_line("a GROUP header")?;
    let order = parse_header(line, raw, "GROUP")?;
    let mut rows = Vec::with_capacity(order);
    for _ in 0..order {
        let (line, raw) = reader.expect_line("a multiplication table row")?;
        rows.push(parse_row(line, raw, order)?);
    }
    Ok(FiniteGroup::from_table(&rows)?)
}

fn expect_end(reader: &mut LineReader<'_>) -> Result<(), IoError> {
    if let Some((line, raw)) = reader.next_line() {
        return Err(IoError::Parse {
            line,
            column: token_column(raw, 0),
            message: "trailing content after the object".into(),
        });
    }
    Ok(())
}

/// Parses the group text format.
pub fn parse_group(text: &str) -> Result<FiniteGroup, IoError> {
    let mut reader = LineReader::new(text);
    let group = parse_group_block(&mut reader)?;
    expect_end(&mut reader)?;
    Ok(group)
}

/// Parses the Rees matrix text format.
pub fn parse_rms(text: &str) -> Result<ReesMatrixSemigroup, IoError> {
    let mut reader = LineReader::new(text);
    let (line, raw) = reader.expect_line("an RMS header")?;
    if raw.trim() != "RMS" {
        return Err(IoError::Parse {
            line,
            column: token_column(raw, 0),
            message: format!("expected \"RMS\", found {:?}", raw.trim()),
        });
    }
    let group = parse_group_block(&mut reader)?;
    let (line, raw) = reader.expect_line("an I header")?;
    let i_count = parse_header(line, raw, "I")?;
    let (line, raw) = reader.expect_line("a LAMBDA header")?;
    let lambda_count = parse_header(line, raw, "LAMBDA")?;
    let mut rows = Vec::with_capacity(lambda_count);
    for _ in 0..lambda_count {
        let (line, raw) = reader.expect_line("a sandwich matrix row")?;
        rows.push(parse_row(line, raw, i_count)?);
    }
    expect_end(&mut reader)?;
    Ok(ReesMatrixSemigroup::new(&group, i_count, lambda_count, &rows)?)
}

/// Parses either format, deciding by the first keyword.
pub fn parse_artifact(text: &str) -> Result<Artifact, IoError> {
    let mut reader = LineReader::new(text);
    match reader.next_line() {
        Some((_, raw)) if raw.trim() == "RMS" => Ok(Artifact::Rms(parse_rms(text)?)),
        Some((_, raw)) if raw.split_whitespace().next() == Some("GROUP") => {
            Ok(Artifact::Group(parse_group(text)?))
        }
        Some((line, raw)) => Err(IoError::Parse {
            line,
            column: token_column(raw, 0),
            message: format!(
                "expected \"GROUP\" or \"RMS\", found {:?}",
                raw.split_whitespace().next().unwrap_or("")
            ),
        }),
        None => Err(IoError::Parse {
            line: 0,
            column: 0,
            message: "empty input".into(),
        }),
    }
}

pub fn read_group(path: impl AsRef<Path>) -> Result<FiniteGroup, IoError> {
    parse_group(&std::fs::read_to_string(path)?)
}

pub fn read_rms(path: impl AsRef<Path>) -> Result<ReesMatrixSemigroup, IoError> {
    parse_rms(&std::fs::read_to_string(path)?)
}

pub fn read_artifact(path: impl AsRef<Path>) -> Result<Artifact, IoError> {
    parse_artifact(&std::fs::read_to_string(path)?)
}

/// Renders a group in the text format (inverse of [`parse_group`]).
pub fn render_group(group: &FiniteGroup) -> String {
    let n = group.order();
    let mut out = format!("GROUP {n}\n");
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| group.op(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Renders a Rees matrix semigroup in the text format (inverse of
/// [`parse_rms`]).
pub fn render_rms(rms: &ReesMatrixSemigroup) -> String {
    let mut out = String::from("RMS\n");
    out.push_str(&render_group(rms.group()));
    out.push_str(&format!("I {}\n", rms.i_count()));
    out.push_str(&format!("LAMBDA {}\n", rms.lambda_count()));
    for lambda in 0..rms.lambda_count() {
        let row: Vec<String> =
            (0..rms.i_count()).map(|i| rms.sandwich_entry(lambda, i).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counterexample::CounterInstance;

    #[test]
    fn trivial_group_parses() {
        let g = parse_group("GROUP 1\n0\n").unwrap();
        assert_eq!(g.order(), 1);
    }

    #[test]
    fn group_round_trip() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let text = render_group(&z4);
        assert_eq!(text, "GROUP 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n");
        assert_eq!(parse_group(&text).unwrap(), z4);
    }

    #[test]
    fn rms_round_trip() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let rms = ReesMatrixSemigroup::new(&z4, 2, 2, &[vec![0, 0], vec![0, 2]]).unwrap();
        let text = render_rms(&rms);
        let back = parse_rms(&text).unwrap();
        assert_eq!(back.group(), rms.group());
        assert_eq!(back.i_count(), 2);
        assert_eq!(back.lambda_count(), 2);
        assert_eq!(back.sandwich_entry(1, 1), 2);
    }

    #[test]
    fn syntax_errors_cite_line_and_column() {
        match parse_group("GROUP 2\n0 1\n1 x\n") {
            Err(IoError::Parse { line: 3, column: 3, .. }) => {}
            other => panic!("expected a parse error at 3:3, got {other:?}"),
        }
        match parse_group("GROUP 2\n0 1 1\n1 0\n") {
            Err(IoError::Parse { line: 2, column, .. }) => assert_eq!(column, 5),
            other => panic!("expected a row-width error, got {other:?}"),
        }
        match parse_group("GRUOP 2\n") {
            Err(IoError::Parse { line: 1, column: 1, .. }) => {}
            other => panic!("expected a header error, got {other:?}"),
        }
        match parse_group("GROUP 2\n0 1\n") {
            Err(IoError::Parse { line: 0, .. }) => {}
            other => panic!("expected an end-of-input error, got {other:?}"),
        }
    }

    #[test]
    fn validation_errors_cite_the_law() {
        // 0 is an identity but the rest of the table is not associative:
        // (1·1)·2 = 0·2 = 2 while 1·(1·2) = 1·1 = 0.
        let text = "GROUP 3\n0 1 2\n1 0 1\n2 1 0\n";
        match parse_group(text) {
            Err(IoError::Group(GroupError::NotAssociative { .. })) => {}
            other => panic!("expected an associativity failure, got {other:?}"),
        }
    }

    #[test]
    fn artifact_sniffing() {
        assert!(matches!(parse_artifact("GROUP 1\n0\n"), Ok(Artifact::Group(_))));
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let rms = ReesMatrixSemigroup::new(&z2, 1, 1, &[vec![0]]).unwrap();
        assert!(matches!(parse_artifact(&render_rms(&rms)), Ok(Artifact::Rms(_))));
        assert!(matches!(
            parse_artifact("WHAT 3\n"),
            Err(IoError::Parse { line: 1, column: 1, .. })
        ));
    }

    #[test]
    fn bundled_files_match_the_committed_instances() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
        let s = read_rms(format!("{dir}/order21.rms")).unwrap();
        let inst = CounterInstance::standard();
        assert_eq!(s.group(), inst.rms.group());
        assert_eq!(s.i_count(), 2);
        assert_eq!(s.lambda_count(), 2);
        for lambda in 0..2 {
            for i in 0..2 {
                assert_eq!(s.sandwich_entry(lambda, i), inst.rms.sandwich_entry(lambda, i));
            }
        }

        let z4 = read_group(format!("{dir}/z4.grp")).unwrap();
        assert_eq!(z4, FiniteGroup::cyclic(4).unwrap());
        let z4c = read_rms(format!("{dir}/z4c.rms")).unwrap();
        assert!(z4c.is_central().unwrap());
        let z6 = read_group(format!("{dir}/z6.grp")).unwrap();
        assert_eq!(z6, FiniteGroup::cyclic(6).unwrap());
        let s3 = read_group(format!("{dir}/s3.grp")).unwrap();
        assert_eq!(s3, FiniteGroup::symmetric(3).unwrap());
    }

    proptest::proptest! {
        #[test]
        fn random_artifacts_round_trip(
            n in 1usize..8,
            i_count in 1usize..4,
            lambda_count in 1usize..4,
            entropy in 0usize..1_000_000,
        ) {
            let g = FiniteGroup::cyclic(n).unwrap();
            proptest::prop_assert_eq!(&parse_group(&render_group(&g)).unwrap(), &g);

            let mut feed = entropy;
            let rows: Vec<Vec<usize>> = (0..lambda_count)
                .map(|_| {
                    (0..i_count)
                        .map(|_| {
                            let v = feed % n;
                            feed /= 7;
                            v
                        })
                        .collect()
                })
                .collect();
            let rms = ReesMatrixSemigroup::new(&g, i_count, lambda_count, &rows).unwrap();
            let back = parse_rms(&render_rms(&rms)).unwrap();
            proptest::prop_assert_eq!(back.group(), rms.group());
            proptest::prop_assert_eq!(back.i_count(), rms.i_count());
            proptest::prop_assert_eq!(back.lambda_count(), rms.lambda_count());
            for lambda in 0..lambda_count {
                for i in 0..i_count {
                    proptest::prop_assert_eq!(
                        back.sandwich_entry(lambda, i),
                        rms.sandwich_entry(lambda, i)
                    );
                }
            }
        }
    }
}
