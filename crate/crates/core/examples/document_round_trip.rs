//! Write a labeling document, read it back, then break it on purpose.

use radiogrid::construct::optimal_labeling;
use radiogrid::io::{cmd_verify, LabelingDocument};
use radiogrid::GridGraph;

fn main() -> radiogrid::Result<()> {
    let f = optimal_labeling(&GridGraph::new(4, 3)?)?;
    let json = LabelingDocument::from_labeling(&f).to_json();
    print!("{}", cmd_verify(&json)?.text);

    let mut doc = LabelingDocument::from_json(&json)?;
    assert_eq!(doc.to_labeling()?, f);
    // Move the last vertex one step earlier.
    let last = doc.labels.iter_mut().max_by_key(|e| e.label).unwrap();
    last.label -= 1;
    doc.span -= 1;
    print!("{}", cmd_verify(&doc.to_json())?.text);
    Ok(())
}
