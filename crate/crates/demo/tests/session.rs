use cfcolour::cli::{Algorithm, Family, TargetNotion};
use cfcolour::colours::binomial;
use cfcolour::Error;
use cfcolour_demo::{exact_optimum, size_limit, Colouring, Request, PROBE_LIMIT};

fn request(family: Family, n: usize, t: usize) -> Request {
    Request { family, n, t, seed: 3, algorithm: None }
}

#[test]
fn rectangle_picture_has_points_and_colours() {
    let c = Colouring::new(&request(Family::Rectangles, 24, 2)).unwrap();
    let pic = c.picture();
    assert!(pic.report.valid);
    assert_eq!((pic.points.len(), pic.vertex_colours.len()), (24, 24));
    assert!(pic.report.trace.is_some() && pic.report.millis.is_none());
}

#[test]
fn every_interval_probe_has_a_witness() {
    let c = Colouring::new(&request(Family::Intervals, 20, 2)).unwrap();
    for a in 0..20u32 {
        for b in a + 1..20 {
            let p = c.probe(&(a..=b).collect::<Vec<_>>()).unwrap();
            let w = p.witness.expect("unique token");
            assert_eq!(c.sigma().get(&w.subset).to_string(), w.token);
            assert!(w.subset.iter().all(|v| (a..=b).contains(v)));
        }
    }
}

#[test]
fn union_of_two_intervals_has_a_witness() {
    let c = Colouring::new(&request(Family::Intervals, 31, 2)).unwrap();
    let sel: Vec<u32> = (2..6).chain(11..25).collect();
    let p = c.probe(&sel).unwrap();
    assert_eq!(p.subsets, 18 * 17 / 2);
    assert!(p.witness.is_some());
    assert!(p.histogram.windows(2).all(|w| w[0].1 >= w[1].1));
}

#[test]
fn probe_normalizes_and_rejects() {
    let c = Colouring::new(&request(Family::Discs, 10, 2)).unwrap();
    let p = c.probe(&[4, 1, 4]).unwrap();
    assert_eq!((p.vertices, p.subsets, p.distinct), (vec![1, 4], 1, 1));
    assert!(matches!(c.probe(&[10]), Err(Error::InvalidInput(_))));
}

#[test]
fn size_limits_are_enforced() {
    let n = size_limit(Family::Discs, Algorithm::TUmSum) + 1;
    assert!(matches!(Colouring::new(&request(Family::Discs, n, 2)), Err(Error::SizeLimit { .. })));
    assert!(matches!(Colouring::new(&request(Family::Rectangles, 8, 4)), Err(Error::SizeLimit { .. })));
    let n = size_limit(Family::Intervals, Algorithm::TUmSum);
    let c = Colouring::new(&Request { algorithm: Some(Algorithm::TUmSum), ..request(Family::Intervals, n, 3) }).unwrap();
    let all: Vec<u32> = (0..n as u32).collect();
    assert!(binomial(n, 3) > PROBE_LIMIT as u64);
    assert!(matches!(c.probe(&all), Err(Error::SizeLimit { .. })));
}

#[test]
fn algorithm_can_be_chosen() {
    let req = Request { algorithm: Some(Algorithm::TUmSum), ..request(Family::Rectangles, 12, 3) };
    let pic = Colouring::new(&req).unwrap().picture();
    assert_eq!((pic.report.algorithm, pic.report.t), (Algorithm::TUmSum, 3));
    assert!(pic.report.valid);
}

#[test]
fn exact_optimum_of_a_short_line() {
    let r = exact_optimum(&request(Family::Intervals, 7, 2), TargetNotion::Cf).unwrap();
    assert_eq!(r.optimum, 3);
}

#[test]
fn requests_parse_from_json() {
    let req: Request = serde_json::from_str(r#"{"family":"rectangles","n":9,"algorithm":"rect-subset"}"#).unwrap();
    assert_eq!((req.t, req.seed, req.algorithm), (2, 0, Some(Algorithm::RectSubset)));
    assert!(serde_json::from_str::<Request>(r#"{"family":"rectangles","n":9,"k":1}"#).is_err());
}
