use crate::cochain::Cochain;
use crate::diagram::{PdInput, Side};
use crate::error::{Error, Result};
use crate::modular::CoefficientModule;
use crate::perm::Perm;
use crate::statesum::{ColoringTriples, TripleRecord};
use crate::yb::{TwistedYBSet, YBOperator};

fn err(file: &str, line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        file: file.to_string(),
        line,
        col,
        msg: msg.into(),
    }
}

/// Lines that carry content, with 1-based numbers; `#` starts a comment.
fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            if stripped.trim().is_empty() {
                None
            } else {
                Some((i + 1, stripped))
            }
        })
        .collect()
}

/// Whitespace-separated tokens with their 1-based starting columns.
fn split_tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut rest = line;
    let mut offset = 0usize;
    loop {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            break;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        out.push((offset + 1, &trimmed[..end]));
        offset += end;
        rest = &trimmed[end..];
    }
    out
}

fn num<T: std::str::FromStr>(file: &str, line: usize, col: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| err(file, line, col, format!("expected a number, found `{tok}`")))
}

/// Structure file: `yb <size>`, then <size> rows `r1 <entries>`, <size>
/// rows `r2 <entries>`, and optionally `twist <permutation>`.  Entries are
/// 0-based.  Table validation happens in the structure constructors, so
/// semantic failures surface as their own errors, not parse errors.
pub fn parse_structure(file: &str, text: &str) -> Result<TwistedYBSet> {
    let lines = content_lines(text);
    let mut pos = 0usize;
    let next = |pos: &mut usize| -> Option<(usize, Vec<(usize, &str)>)> {
        let (no, line) = *lines.get(*pos)?;
        *pos += 1;
        Some((no, split_tokens(line)))
    };
    let Some((no, toks)) = next(&mut pos) else {
        return Err(err(file, 1, 1, "empty structure file"));
    };
    if toks[0].1 != "yb" {
        return Err(err(file, no, toks[0].0, "expected `yb <size>` header"));
    }
    if toks.len() != 2 {
        return Err(err(
            file,
            no,
            toks[0].0,
            "header takes exactly one size argument",
        ));
    }
    let size: usize = num(file, no, toks[1].0, toks[1].1)?;
    if size == 0 {
        return Err(err(file, no, toks[1].0, "size must be positive"));
    }
    let read_table = |pos: &mut usize, key: &str| -> Result<Vec<usize>> {
        let mut flat = Vec::with_capacity(size * size);
        for row in 0..size {
            let Some((no, toks)) = next(pos) else {
                return Err(err(
                    file,
                    lines.last().map_or(1, |l| l.0),
                    1,
                    format!("missing `{key}` row {row}"),
                ));
            };
            if toks[0].1 != key {
                return Err(err(
                    file,
                    no,
                    toks[0].0,
                    format!("expected `{key}` row {row}"),
                ));
            }
            if toks.len() != size + 1 {
                return Err(err(
                    file,
                    no,
                    toks[0].0,
                    format!("`{key}` row needs {size} entries, found {}", toks.len() - 1),
                ));
            }
            for (col, tok) in &toks[1..] {
                flat.push(num(file, no, *col, tok)?);
            }
        }
        Ok(flat)
    };
    let r1 = read_table(&mut pos, "r1")?;
    let r2 = read_table(&mut pos, "r2")?;
    let op = YBOperator::new(size, r1, r2)?;
    let twist = match next(&mut pos) {
        None => return Ok(TwistedYBSet::untwisted(op)),
        Some((no, toks)) => {
            if toks[0].1 != "twist" {
                return Err(err(file, no, toks[0].0, "expected `twist` or end of file"));
            }
            if toks.len() != size + 1 {
                return Err(err(
                    file,
                    no,
                    toks[0].0,
                    format!("`twist` needs {size} entries, found {}", toks.len() - 1),
                ));
            }
            let mut map = Vec::with_capacity(size);
            for (col, tok) in &toks[1..] {
                map.push(num(file, no, *col, tok)?);
            }
            Perm::new(map)?
        }
    };
    if let Some((no, toks)) = next(&mut pos) {
        return Err(err(file, no, toks[0].0, "trailing content after `twist`"));
    }
    TwistedYBSet::new(op, twist)
}

pub fn emit_structure(tw: &TwistedYBSet) -> String {
    let size = tw.size();
    let mut out = format!("yb {size}\n");
    let row = |f: &dyn Fn(usize, usize) -> usize, x: usize| -> String {
        (0..size)
            .map(|y| f(x, y).to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    for x in 0..size {
        out += &format!("r1 {}\n", row(&|x, y| tw.op().r1(x, y), x));
    }
    for x in 0..size {
        out += &format!("r2 {}\n", row(&|x, y| tw.op().r2(x, y), x));
    }
    if !tw.twist().is_identity() {
        let perm = tw
            .twist()
            .as_slice()
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out += &format!("twist {perm}\n");
    }
    out
}

/// Cochain file: `cochain <degree> <modulus> <unit>` followed by one line
/// per supported tuple, `x1 ... xd value`.  The carrier size comes from
/// the structure the cochain is used with.
pub fn parse_cochain(file: &str, text: &str, size: usize) -> Result<(Cochain, CoefficientModule)> {
    let lines = content_lines(text);
    let Some(&(no, header)) = lines.first() else {
        return Err(err(file, 1, 1, "empty cochain file"));
    };
    let toks = split_tokens(header);
    if toks[0].1 != "cochain" {
        return Err(err(
            file,
            no,
            toks[0].0,
            "expected `cochain <degree> <modulus> <unit>`",
        ));
    }
    if toks.len() != 4 {
        return Err(err(
            file,
            no,
            toks[0].0,
            "header takes degree, modulus and unit",
        ));
    }
    let degree: usize = num(file, no, toks[1].0, toks[1].1)?;
    if degree == 0 || degree > 6 {
        return Err(err(file, no, toks[1].0, "degree must be between 1 and 6"));
    }
    let modulus: u64 = num(file, no, toks[2].0, toks[2].1)?;
    let unit: u64 = num(file, no, toks[3].0, toks[3].1)?;
    let module = CoefficientModule::new(modulus, unit)?;
    let mut phi = Cochain::zero(size, degree);
    for &(no, line) in &lines[1..] {
        let toks = split_tokens(line);
        if toks.len() != degree + 1 {
            return Err(err(
                file,
                no,
                toks[0].0,
                format!("expected {degree} tuple entries and a value"),
            ));
        }
        let mut tuple = Vec::with_capacity(degree);
        for (col, tok) in &toks[..degree] {
            let v: usize = num(file, no, *col, tok)?;
            if v >= size {
                return Err(err(
                    file,
                    no,
                    *col,
                    format!("entry {v} out of range for size {size}"),
                ));
            }
            tuple.push(v);
        }
        let (vcol, vtok) = toks[degree];
        let value: i64 = num(file, no, vcol, vtok)?;
        phi.set(&tuple, module.reduce(value as i128));
    }
    Ok((phi, module))
}

pub fn emit_cochain(phi: &Cochain, module: &CoefficientModule) -> String {
    let mut out = format!(
        "cochain {} {} {}\n",
        phi.degree,
        module.modulus(),
        module.unit()
    );
    for (tuple, value) in phi.support() {
        let entries = tuple
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        out += &format!("{entries} {value}\n");
    }
    out
}

struct Scan<'a> {
    file: &'a str,
    line: usize,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Scan<'a> {
    fn new(file: &'a str, line: usize, text: &str) -> Self {
        Scan {
            file,
            line,
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(found) if found == c => {
                self.pos += 1;
                Ok(())
            }
            found => Err(err(
                self.file,
                self.line,
                self.pos + 1,
                format!(
                    "expected `{c}`, found {}",
                    found.map_or("end of line".to_string(), |f| format!("`{f}`"))
                ),
            )),
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(err(self.file, self.line, start + 1, "expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        num(self.file, self.line, start + 1, &text)
    }
}

/// Planar diagram file: a crossing list `[[a,b,c,d],...]` on the first
/// content line, then optional directives `mirror`, `normal left|right`,
/// `circles <k>`, `outer <semiarc> left|right`, one per line.
pub fn parse_pd(file: &str, text: &str) -> Result<PdInput> {
    let lines = content_lines(text);
    let Some(&(no, head)) = lines.first() else {
        return Err(err(file, 1, 1, "empty diagram file"));
    };
    let mut scan = Scan::new(file, no, head);
    let mut crossings = Vec::new();
    scan.expect('[')?;
    if scan.peek() == Some(']') {
        scan.pos += 1;
    } else {
        loop {
            scan.expect('[')?;
            let mut t = [0usize; 4];
            for (i, slot) in t.iter_mut().enumerate() {
                if i > 0 {
                    scan.expect(',')?;
                }
                *slot = scan.number()?;
            }
            scan.expect(']')?;
            crossings.push(t);
            match scan.peek() {
                Some(',') => {
                    scan.pos += 1;
                }
                Some(']') => {
                    scan.pos += 1;
                    break;
                }
                found => {
                    return Err(err(
                        file,
                        no,
                        scan.pos + 1,
                        format!(
                            "expected `,` or `]`, found {}",
                            found.map_or("end of line".to_string(), |f| format!("`{f}`"))
                        ),
                    ))
                }
            }
        }
    }
    if let Some(c) = scan.peek() {
        return Err(err(
            file,
            no,
            scan.pos + 1,
            format!("trailing `{c}` after crossing list"),
        ));
    }
    let mut pd = PdInput::knot(crossings);
    let side = |file: &str, no: usize, col: usize, tok: &str| -> Result<Side> {
        match tok {
            "left" => Ok(Side::Left),
            "right" => Ok(Side::Right),
            _ => Err(err(
                file,
                no,
                col,
                format!("expected `left` or `right`, found `{tok}`"),
            )),
        }
    };
    for &(no, line) in &lines[1..] {
        let toks = split_tokens(line);
        match toks[0].1 {
            "mirror" if toks.len() == 1 => pd.mirror = true,
            "normal" if toks.len() == 2 => {
                pd.normal_right = side(file, no, toks[1].0, toks[1].1)? == Side::Right;
            }
            "circles" if toks.len() == 2 => {
                pd.circles = num(file, no, toks[1].0, toks[1].1)?;
            }
            "outer" if toks.len() == 3 => {
                let s: usize = num(file, no, toks[1].0, toks[1].1)?;
                pd.outer = Some((s, side(file, no, toks[2].0, toks[2].1)?));
            }
            other => {
                return Err(err(
                    file,
                    no,
                    toks[0].0,
                    format!("unknown directive `{other}`"),
                ))
            }
        }
    }
    Ok(pd)
}

pub fn emit_pd(pd: &PdInput) -> String {
    let list = pd
        .crossings
        .iter()
        .map(|t| format!("[{},{},{},{}]", t[0], t[1], t[2], t[3]))
        .collect::<Vec<_>>()
        .join(",");
    let mut out = format!("[{list}]\n");
    if pd.mirror {
        out += "mirror\n";
    }
    if pd.normal_right {
        out += "normal right\n";
    }
    if pd.circles > 0 {
        out += &format!("circles {}\n", pd.circles);
    }
    if let Some((s, side)) = pd.outer {
        out += &format!(
            "outer {s} {}\n",
            if side == Side::Left { "left" } else { "right" }
        );
    }
    out
}

/// Surface triple-point file: `coloring <id>` opens a group, each
/// `triple <x> <y> <z> <sign> <region>` line adds one triple point to the
/// current group.
pub fn parse_triples(file: &str, text: &str) -> Result<Vec<ColoringTriples>> {
    let mut out: Vec<ColoringTriples> = Vec::new();
    for (no, line) in content_lines(text) {
        let toks = split_tokens(line);
        match toks[0].1 {
            "coloring" if toks.len() == 2 => {
                out.push(ColoringTriples {
                    id: toks[1].1.to_string(),
                    triples: Vec::new(),
                });
            }
            "triple" if toks.len() == 6 => {
                let Some(group) = out.last_mut() else {
                    return Err(err(file, no, toks[0].0, "`triple` before any `coloring`"));
                };
                let x = num(file, no, toks[1].0, toks[1].1)?;
                let y = num(file, no, toks[2].0, toks[2].1)?;
                let z = num(file, no, toks[3].0, toks[3].1)?;
                let sign: i64 = num(file, no, toks[4].0, toks[4].1)?;
                if sign != 1 && sign != -1 {
                    return Err(err(file, no, toks[4].0, "sign must be 1 or -1"));
                }
                let region: i64 = num(file, no, toks[5].0, toks[5].1)?;
                group.triples.push(TripleRecord {
                    x,
                    y,
                    z,
                    sign: sign as i8,
                    region,
                });
            }
            other => {
                return Err(err(
                    file,
                    no,
                    toks[0].0,
                    format!("expected `coloring` or `triple`, found `{other}`"),
                ))
            }
        }
    }
    Ok(out)
}

pub fn emit_triples(groups: &[ColoringTriples]) -> String {
    let mut out = String::new();
    for g in groups {
        out += &format!("coloring {}\n", g.id);
        for t in &g.triples {
            out += &format!("triple {} {} {} {} {}\n", t.x, t.y, t.z, t.sign, t.region);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::yb::cyclic_operator;

    #[test]
    fn structure_round_trip() {
        let text = "# three-element cyclic structure\nyb 3\nr1 1 2 0\nr1 1 2 0\nr1 1 2 0\nr2 2 2 2\nr2 0 0 0\nr2 1 1 1\ntwist 1 2 0\n";
        let tw = parse_structure("s.yb", text).unwrap();
        assert_eq!(tw.size(), 3);
        assert_eq!(tw.op().apply(0, 1), (2, 2));
        assert_eq!(tw.twist().apply(2), 0);
        let emitted = emit_structure(&tw);
        let again = parse_structure("s.yb", &emitted).unwrap();
        assert_eq!(again.op().apply(1, 2), tw.op().apply(1, 2));
        assert_eq!(again.twist().as_slice(), tw.twist().as_slice());
    }

    #[test]
    fn structure_without_twist_is_untwisted() {
        let tw = parse_structure("s.yb", "yb 2\nr1 1 0\nr1 1 0\nr2 1 1\nr2 0 0\n").unwrap();
        assert!(tw.twist().is_identity());
        assert!(!emit_structure(&tw).contains("twist"));
    }

    #[test]
    fn structure_parse_errors_carry_positions() {
        let e = parse_structure("s.yb", "yb 2\nr1 1 0\nr2 1 1\n").unwrap_err();
        match e {
            Error::Parse {
                file, line, col, ..
            } => {
                assert_eq!(file, "s.yb");
                assert_eq!((line, col), (3, 1));
            }
            other => panic!("unexpected error {other:?}"),
        }
        let e = parse_structure("s.yb", "yb 2\nr1 1 x\nr1 1 0\nr2 1 1\nr2 0 0\n").unwrap_err();
        match e {
            Error::Parse { line, col, .. } => assert_eq!((line, col), (2, 6)),
            other => panic!("unexpected error {other:?}"),
        }
        // semantic failures are not parse errors
        let e = parse_structure("s.yb", "yb 2\nr1 0 0\nr1 0 0\nr2 0 0\nr2 0 0\n").unwrap_err();
        assert!(matches!(e, Error::NotInvertible { .. }));
    }

    #[test]
    fn cochain_round_trip_and_reduction() {
        let text = "cochain 2 5 2\n0 1 7\n1 0 -1\n";
        let (phi, module) = parse_cochain("c.co", text, 3).unwrap();
        assert_eq!(phi.degree, 2);
        assert_eq!(phi.get(&[0, 1]), 2); // 7 mod 5
        assert_eq!(phi.get(&[1, 0]), 4); // -1 mod 5
        assert_eq!(module.unit(), 2);
        let emitted = emit_cochain(&phi, &module);
        let (again, _) = parse_cochain("c.co", &emitted, 3).unwrap();
        assert_eq!(again, phi);
    }

    #[test]
    fn cochain_errors() {
        assert!(matches!(
            parse_cochain("c.co", "cochain 2 5 2\n0 9 1\n", 3),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_cochain("c.co", "cochain 0 5 2\n", 3),
            Err(Error::Parse { line: 1, .. })
        ));
        // bad unit is a module error, not a parse error
        assert!(matches!(
            parse_cochain("c.co", "cochain 2 6 2\n", 3),
            Err(Error::UnitNotInvertible { .. })
        ));
    }

    #[test]
    fn pd_round_trip() {
        let text =
            "[[1,4,2,5],[3,6,4,1],[5,2,6,3]] # trefoil\nnormal right\ncircles 2\nouter 4 left\n";
        let pd = parse_pd("k.pd", text).unwrap();
        assert_eq!(pd.crossings.len(), 3);
        assert_eq!(pd.crossings[1], [3, 6, 4, 1]);
        assert!(pd.normal_right);
        assert!(!pd.mirror);
        assert_eq!(pd.circles, 2);
        assert_eq!(pd.outer, Some((4, Side::Left)));
        let again = parse_pd("k.pd", &emit_pd(&pd)).unwrap();
        assert_eq!(again, pd);
    }

    #[test]
    fn pd_accepts_spaces_and_empty_lists() {
        let pd = parse_pd("k.pd", "[ [1, 2, 2, 1] ]\nmirror\n").unwrap();
        assert_eq!(pd.crossings, vec![[1, 2, 2, 1]]);
        assert!(pd.mirror);
        let pd = parse_pd("k.pd", "[]\ncircles 3\n").unwrap();
        assert!(pd.crossings.is_empty());
        assert_eq!(pd.circles, 3);
    }

    #[test]
    fn pd_errors_carry_positions() {
        let e = parse_pd("k.pd", "[[1,2,2]]\n").unwrap_err();
        match e {
            Error::Parse { line, col, .. } => assert_eq!((line, col), (1, 8)),
            other => panic!("unexpected error {other:?}"),
        }
        assert!(matches!(
            parse_pd("k.pd", "[[1,2,2,1]]\nouter 1 up\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_pd("k.pd", "[[1,2,2,1]] junk\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn triples_grouping() {
        let text = "coloring a\ntriple 0 1 2 1 -1\ntriple 1 1 0 -1 0\ncoloring b\n";
        let groups = parse_triples("t.tri", text).unwrap();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].triples.len(), 2);
        assert_eq!(groups[0].triples[1].sign, -1);
        assert_eq!(groups[0].triples[0].region, -1);
        assert!(groups[1].triples.is_empty());
        let again = parse_triples("t.tri", &emit_triples(&groups)).unwrap();
        assert_eq!(again, groups);
        assert!(matches!(
            parse_triples("t.tri", "triple 0 0 0 1 0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_triples("t.tri", "coloring a\ntriple 0 0 0 2 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn parsed_structures_compose_with_the_rest() {
        // a parsed structure behaves like a constructed one
        let text = emit_structure(&TwistedYBSet::untwisted(cyclic_operator(3)));
        let tw = parse_structure("s.yb", &text).unwrap();
        assert_eq!(tw.classify().unwrap(), crate::yb::StructureClass::Biquandle);
    }
}
