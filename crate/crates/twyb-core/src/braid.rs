use crate::diagram::PdInput;
use crate::error::{Error, Result};
use std::collections::HashMap;

struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }
}

/// Planar diagram of a braid closure.  The word lists generators by index,
/// sign giving the crossing sign: letter i crosses the strands at positions
/// i-1 and i, with the left strand passing over when the letter is
/// positive.  Strands run bottom to top and close off around the right
/// side, so the region left of the first semiarc is the outer one and no
/// outer directive is needed.  Positions no letter touches close into
/// crossing-free circles.
pub fn braid_pd(word: &[i64], strands: usize) -> Result<PdInput> {
    if strands == 0 {
        return Err(Error::BadBraidLetter { letter: 0, strands });
    }
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::BadBraidLetter { letter: g, strands });
        }
    }
    // provisional edge ids: strand bottoms first, then two fresh ids per
    // letter for the edges leaving each crossing
    let mut current: Vec<usize> = (0..strands).collect();
    let mut touched = vec![false; strands];
    let mut next_id = strands;
    let mut prov: Vec<[usize; 4]> = Vec::with_capacity(word.len());
    for &g in word {
        let i = g.unsigned_abs() as usize;
        let (l, r) = (current[i - 1], current[i]);
        let (tl, tr) = (next_id, next_id + 1);
        next_id += 2;
        touched[i - 1] = true;
        touched[i] = true;
        // tuples read counterclockwise from the incoming under-strand
        prov.push(if g > 0 {
            [r, tr, tl, l]
        } else {
            [l, r, tr, tl]
        });
        current[i - 1] = tl;
        current[i] = tr;
    }
    let circles = (0..strands).filter(|&p| !touched[p]).count();
    if prov.is_empty() {
        let mut pd = PdInput::knot(Vec::new());
        pd.circles = circles;
        return Ok(pd);
    }
    // closing the braid identifies each strand top with its bottom
    let mut dsu = Dsu::new(next_id);
    for p in 0..strands {
        dsu.union(current[p], p);
    }
    let tuples: Vec<[usize; 4]> = prov.iter().map(|t| t.map(|x| dsu.find(x))).collect();
    // where each semiarc flows into a crossing: the under-in slot, and the
    // over slot on the incoming side of the letter's sign
    let mut head: HashMap<usize, (usize, usize)> = HashMap::new();
    for (k, t) in tuples.iter().enumerate() {
        head.insert(t[0], (k, 0));
        let over_in = if word[k] > 0 { 3 } else { 1 };
        head.insert(t[over_in], (k, over_in));
    }
    // walk each component in strand order, numbering semiarcs as visited;
    // starting from the first strand bottom makes the labels canonical
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut next_label = 1;
    for p in 0..strands {
        if !touched[p] {
            continue;
        }
        let start = dsu.find(p);
        let mut c = start;
        while !label.contains_key(&c) {
            label.insert(c, next_label);
            next_label += 1;
            let (k, slot) = head[&c];
            let exit = match slot {
                0 => 2,
                1 => 3,
                3 => 1,
                _ => unreachable!("slot 2 is never an inflow"),
            };
            c = tuples[k][exit];
        }
    }
    let crossings = tuples.iter().map(|t| t.map(|c| label[&c])).collect();
    let mut pd = PdInput::knot(crossings);
    pd.circles = circles;
    Ok(pd)
}
