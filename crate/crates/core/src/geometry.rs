//! Exact integer segment tests used to check drawings.

pub type Point = (i64, i64);

fn orient(a: Point, b: Point, c: Point) -> i128 {
    let (ax, ay) = (a.0 as i128, a.1 as i128);
    ((b.0 as i128 - ax) * (c.1 as i128 - ay)) - ((b.1 as i128 - ay) * (c.0 as i128 - ax))
}

fn on_segment(a: Point, b: Point, p: Point) -> bool {
    orient(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

fn intersects(a: Point, b: Point, c: Point, d: Point) -> bool {
    let (d1, d2) = (orient(c, d, a), orient(c, d, b));
    let (d3, d4) = (orient(a, b, c), orient(a, b, d));
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    on_segment(c, d, a) || on_segment(c, d, b) || on_segment(a, b, c) || on_segment(a, b, d)
}

/// True if the two segments meet anywhere other than at one shared endpoint.
pub fn segments_conflict(s: (Point, Point), t: (Point, Point)) -> bool {
    let (a, b) = s;
    let (c, d) = t;
    if !intersects(a, b, c, d) {
        return false;
    }
    let shared: Vec<Point> = [a, b].into_iter().filter(|p| *p == c || *p == d).collect();
    match shared.as_slice() {
        [] => true,
        [p] => {
            // touching at the shared endpoint only: the other endpoints must not
            // lie on the opposite segment
            let other_s = if *p == a { b } else { a };
            let other_t = if *p == c { d } else { c };
            on_segment(c, d, other_s) || on_segment(a, b, other_t)
        }
        _ => true,
    }
}

/// Checks that a set of segments forms a plane drawing: distinct segments
/// meet only at common endpoints. Exact duplicates are ignored.
pub fn first_conflict(segments: &[(Point, Point)]) -> Option<(usize, usize)> {
    let norm = |(a, b): (Point, Point)| if a <= b { (a, b) } else { (b, a) };
    let mut uniq: Vec<(usize, (Point, Point))> = Vec::new();
    for (i, &s) in segments.iter().enumerate() {
        let s = norm(s);
        if !uniq.iter().any(|(_, t)| *t == s) {
            uniq.push((i, s));
        }
    }
    for x in 0..uniq.len() {
        for y in x + 1..uniq.len() {
            if segments_conflict(uniq[x].1, uniq[y].1) {
                return Some((uniq[x].0, uniq[y].0));
            }
        }
    }
    None
}
