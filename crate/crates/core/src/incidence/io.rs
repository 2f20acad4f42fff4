//! Design file format: a `points V` header followed by one block per line as
//! space-separated 1-based point indices. `#` starts a comment line.

use super::{DesignError, IncidenceStructure};

pub fn parse_design_file(text: &str) -> Result<IncidenceStructure, DesignError> {
    let mut v: Option<usize> = None;
    let mut blocks = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| DesignError::Parse { line: i + 1, message };
        match v {
            None => {
                let mut parts = line.split_whitespace();
                match (parts.next(), parts.next().map(str::parse::<usize>), parts.next()) {
                    (Some("points"), Some(Ok(n)), None) if n > 0 => v = Some(n),
                    _ => return Err(parse_err(format!("expected 'points V', found {line:?}"))),
                }
            }
            Some(n) => {
                let mut block = Vec::new();
                for tok in line.split_whitespace() {
                    let x: usize = tok
                        .parse()
                        .map_err(|_| parse_err(format!("bad point {tok:?}")))?;
                    if x == 0 || x > n {
                        return Err(parse_err(format!("point {x} out of range 1..={n}")));
                    }
                    block.push(x - 1);
                }
                blocks.push(block);
            }
        }
    }
    let v = v.ok_or(DesignError::Parse {
        line: 0,
        message: "missing 'points V' header".into(),
    })?;
    IncidenceStructure::new(v, blocks)
}

pub fn format_design_file(s: &IncidenceStructure) -> String {
    let mut out = format!("points {}\n", s.v());
    for block in s.blocks() {
        let line: Vec<String> = block.iter().map(|x| (x + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reader_accepts_any_order() {
        let s = parse_design_file("# two lines\npoints 4\n4 2\n\n1 3\n").unwrap();
        assert_eq!(s.blocks(), &[vec![0, 2], vec![1, 3]]);
        assert_eq!(format_design_file(&s), "points 4\n1 3\n2 4\n");
        assert_eq!(parse_design_file(&format_design_file(&s)).unwrap(), s);
    }

    #[test]
    fn reader_errors() {
        assert!(matches!(parse_design_file("1 2 3\n"), Err(DesignError::Parse { line: 1, .. })));
        assert!(matches!(parse_design_file("points 3\n1 4\n"), Err(DesignError::Parse { line: 2, .. })));
        assert!(matches!(parse_design_file("points 3\n1 x\n"), Err(DesignError::Parse { line: 2, .. })));
        assert!(matches!(parse_design_file(""), Err(DesignError::Parse { .. })));
        assert!(matches!(
            parse_design_file("points 3\n1 1\n"),
            Err(DesignError::RepeatedPointInBlock { .. })
        ));
    }
}
