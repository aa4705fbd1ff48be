from embedding import build_embedding
from formulas import parse_modal, print_arith
from kripke import load_model
from utils.files import write_json_file

from .results import CommandResult


def embed_command(
    model_path: str,
    sentence_text: str,
    world: int,
    mode: str,
    out_path: str | None = None,
) -> CommandResult:
    """Build the embedding bundle of a sentence refuted at a world of the model"""
    model = load_model(model_path)
    sentence = parse_modal(sentence_text, model.predicate_arities)
    bundle = build_embedding(model, sentence, world, mode)
    data = bundle.to_dict()

    if out_path is not None:
        write_json_file(out_path, data)

    lines = [
        f"interpretation: {print_arith(bundle.interpreted)}",
        f"obligations: {len(bundle.obligations)}",
    ]
    lines += [
        f"  [{obligation.claim}] {obligation.identifier}: {print_arith(obligation.statement)}"
        for obligation in bundle.obligations
    ]
    return CommandResult(text="\n".join(lines), data=data)
