#!/usr/bin/env python3
"""Writes the synthetic data fixtures under data/ and tests/conversations/.

Deterministic: rerunning produces byte-identical files.
"""

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from fixtures.corpus_data import AMBIGUOUS, COOKING, DIY  # noqa: E402
from fixtures.nlu_data import (TECHNIQUES, COOK_VERBS, DISHES, DIY_TASKS, DURATIONS, GERUNDS,  # noqa
                               INGREDIENTS, INTENT_TEMPLATES, ITEMS, NOISE, NUMBERS, QUESTION_TEMPLATES,
                               STEP_THINGS, STEP_VERBS)
from fixtures.steps import cooking_steps, diy_steps  # noqa: E402
from fixtures.templates_data import RESPONDERS  # noqa: E402

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"


def dump(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1, ensure_ascii=False) + "\n")


def cook_faqs(title, rng):
    t = title.lower()
    pool = [
        ("Can I freeze this?", f"Yes. Freeze the {t} in an airtight container for up to two months."),
        ("How long will leftovers keep?", "Leftovers keep in the fridge for about three days."),
        ("Can I make this ahead of time?", "You can prep everything a day ahead and finish it just before serving."),
        ("How many people does this serve?", f"This {t} serves about four people."),
        ("Can I double the recipe?", "Yes, double every ingredient and use a larger pan. Cooking time goes up slightly."),
    ]
    return [{"question": q, "answer": a} for q, a in rng.sample(pool, 2)]


def diy_faqs(title, rng):
    t = title.lower()
    pool = [
        ("How long does this take?", f"Most people finish the job to {t} in under two hours."),
        ("Do I need special tools?", "No special tools are needed beyond the listed materials."),
        ("Is this safe to do myself?", "Yes, as long as you wear gloves and keep the area ventilated."),
        ("How often should I do this?", "Once or twice a year is enough for most homes."),
    ]
    return [{"question": q, "answer": a} for q, a in rng.sample(pool, 2)]


def build_corpus():
    rng = random.Random(11)
    docs = []
    for i, (title, cuisine, diet, minutes, style, ings, _) in enumerate(COOKING, 1):
        docs.append({
            "id": f"cook-{i:03d}",
            "title": title,
            "domain": "cooking",
            "rating": round(rng.uniform(3.4, 5.0), 1),
            "popularity": rng.randint(40, 9000),
            "estimated_time": minutes,
            "cuisine_tags": cuisine,
            "diet_tags": diet,
            "ingredients": [{"name": n, "quantity": q} for q, n in ings],
            "steps": cooking_steps(title, style, ings, minutes),
            "faqs": cook_faqs(title, rng),
        })
    for i, (title, kind, mats, _) in enumerate(DIY, 1):
        docs.append({
            "id": f"diy-{i:03d}",
            "title": title,
            "domain": "diy",
            "rating": round(rng.uniform(3.4, 5.0), 1),
            "popularity": rng.randint(40, 9000),
            "estimated_time": rng.choice([20, 30, 45, 60, 90, 120, 240]),
            "ingredients": [{"name": n, "quantity": q} for q, n in mats],
            "steps": diy_steps(title, kind, mats),
            "faqs": diy_faqs(title, rng),
        })
    return docs


GERUND = {"remove": "removing", "wash": "washing", "unclog": "unclogging", "fix": "fixing", "paint": "painting",
          "hang": "hanging", "patch": "patching", "change": "changing", "clean": "cleaning", "season": "seasoning",
          "sharpen": "sharpening", "build": "building", "grow": "growing", "plant": "planting", "make": "making",
          "recaulk": "recaulking", "install": "installing", "stain": "staining", "organize": "organizing",
          "descale": "descaling", "deep": "deep", "replace": "replacing", "weatherstrip": "weatherstripping",
          "start": "starting", "repot": "repotting", "peel": "peeling"}


def plural_flip(word):
    if word.endswith("ies"):
        return word[:-3] + "y"
    if word.endswith(("ss", "us")):
        return word
    if word.endswith("s"):
        return word[:-1]
    return word + "s"


def inflected(title):
    words = title.lower().replace("'", "").split()
    if words[0] in GERUND:
        words[0] = GERUND[words[0]]
    words[-1] = plural_flip(words[-1])
    return " ".join(words)


def build_weak_labels(docs):
    rng = random.Random(23)
    train, evals = [], []
    records = [(d, extra) for d, (*_, extra) in zip(docs[:len(COOKING)], COOKING)]
    records += [(d, extra) for d, (*_, extra) in zip(docs[len(COOKING):], DIY)]
    for doc, extra in records:
        title = doc["title"].lower().replace("'", "")
        queries = [title + (" recipe" if doc["domain"] == "cooking" else ""), inflected(doc["title"])] + extra
        queries = list(dict.fromkeys(queries))
        rng.shuffle(queries)
        half = len(queries) // 2
        for q in queries[:half]:
            train.append({"query": q, "positives": [doc["id"]], "negatives": []})
        for q in queries[half:]:
            evals.append({"query": q, "positives": [doc["id"]], "negatives": []})
    by_title = {d["title"]: d["id"] for d in docs}
    for i, (q, title) in enumerate(AMBIGUOUS):
        entry = {"query": q, "positives": [by_title[title]], "negatives": []}
        (train if i % 2 == 0 else evals).append(entry)
    return train, evals


SUBSTITUTIONS = {
    "sweetened condensed milk": ["evaporated milk simmered with sugar", "coconut condensed milk"],
    "condensed milk": ["evaporated milk simmered with sugar", "coconut condensed milk"],
    "buttermilk": ["milk with a tablespoon of lemon juice", "plain yogurt thinned with milk"],
    "butter": ["coconut oil", "vegetable oil"],
    "eggs": ["flax eggs", "unsweetened applesauce"],
    "egg": ["a flax egg", "a quarter cup of applesauce"],
    "heavy cream": ["milk mixed with melted butter", "coconut cream"],
    "sour cream": ["greek yogurt", "plain yogurt"],
    "brown sugar": ["white sugar with a little molasses", "coconut sugar"],
    "sugar": ["honey", "maple syrup"],
    "all-purpose flour": ["bread flour", "a gluten free flour blend"],
    "bread flour": ["all-purpose flour"],
    "baking powder": ["baking soda with cream of tartar"],
    "baking soda": ["baking powder, using three times as much"],
    "cocoa powder": ["melted unsweetened chocolate", "carob powder"],
    "semisweet chocolate chips": ["chopped dark chocolate", "milk chocolate chips"],
    "vanilla extract": ["maple syrup", "almond extract"],
    "milk": ["oat milk", "almond milk"],
    "whole milk": ["half and half thinned with water", "oat milk"],
    "greek yogurt": ["sour cream", "skyr"],
    "plain yogurt": ["greek yogurt", "sour cream"],
    "parmesan cheese": ["pecorino romano", "nutritional yeast"],
    "cheddar cheese": ["monterey jack", "colby cheese"],
    "fresh mozzarella": ["provolone", "burrata"],
    "ricotta cheese": ["cottage cheese"],
    "feta cheese": ["goat cheese"],
    "pancetta": ["bacon", "prosciutto"],
    "soy sauce": ["tamari", "coconut aminos"],
    "fish sauce": ["soy sauce with a squeeze of lime"],
    "tamarind paste": ["lime juice mixed with brown sugar"],
    "rice noodles": ["thin spaghetti"],
    "lemons": ["limes"],
    "lemon": ["lime"],
    "lime": ["lemon"],
    "garlic": ["garlic powder"],
    "onion": ["shallots", "leeks"],
    "shallot": ["red onion"],
    "fresh basil": ["spinach with a little mint", "dried basil"],
    "cilantro": ["parsley"],
    "pine nuts": ["walnuts", "sunflower seeds"],
    "tahini": ["peanut butter"],
    "white wine": ["chicken broth with a splash of vinegar"],
    "red wine": ["beef broth with a splash of red wine vinegar"],
    "heavy whipping cream": ["coconut cream"],
    "maple syrup": ["honey"],
    "honey": ["maple syrup", "agave nectar"],
    "tapioca pearls": ["coconut jelly", "chia seeds"],
    "black tea": ["green tea", "oolong tea"],
    "cornstarch": ["arrowroot powder", "all-purpose flour, using twice as much"],
    "breadcrumbs": ["crushed crackers", "rolled oats"],
    "olive oil": ["avocado oil", "vegetable oil"],
    "vegetable oil": ["canola oil", "melted coconut oil"],
    "yeast": ["baking powder for a quick flatbread"],
    "arborio rice": ["carnaroli rice"],
    "coconut milk": ["heavy cream"],
    "chicken broth": ["vegetable broth"],
    "beef broth": ["mushroom broth"],
    "white vinegar": ["apple cider vinegar", "lemon juice"],
    "dish soap": ["castile soap"],
    "paint stripper": ["a citrus based graffiti remover"],
}

GLOBAL_FAQS = [
    ("How do I know when oil is hot enough?", "Drop in a small piece of bread. If it sizzles right away, the oil is ready."),
    ("What does it mean to fold ingredients?", "Folding means gently lifting and turning the mixture with a spatula so you keep the air in."),
    ("How do I soften butter quickly?", "Cut it into small cubes and leave it at room temperature for about 15 minutes."),
    ("How do I measure flour correctly?", "Spoon the flour into the cup and level it off with a knife instead of scooping."),
    ("What is the difference between baking soda and baking powder?", "Baking soda needs an acid to rise. Baking powder already contains one."),
    ("How do I store fresh herbs?", "Wrap them in a damp paper towel and keep them in the fridge in a bag."),
    ("How can I tell if an egg is fresh?", "Place it in water. Fresh eggs sink and lie flat."),
    ("What safety gear should I wear when sanding?", "Wear safety glasses and a dust mask when sanding."),
    ("How do I find a wall stud?", "Use a stud finder or knock on the wall and listen for a solid sound."),
    ("How long does paint take to dry?", "Most latex paint is dry to the touch in an hour and ready for a second coat in four hours."),
    ("What is the best way to clean up a paint brush?", "Rinse latex paint out with warm soapy water. Oil paint needs mineral spirits."),
    ("How do I shut off the water to a sink?", "Turn the valves under the sink clockwise until they stop."),
    ("How do I keep a cutting board from slipping?", "Put a damp towel under the board."),
    ("What temperature should chicken be cooked to?", "Chicken is safe at an internal temperature of 165 degrees F."),
    ("How do I dispose of used cooking oil?", "Let it cool, pour it into a sealed container and throw it in the trash."),
    ("Can I mix bleach and vinegar for cleaning?", "No. Mixing bleach with vinegar releases toxic chlorine gas."),
    ("How do I remove a stuck jar lid?", "Run the lid under hot water for 30 seconds, then twist with a dry towel."),
    ("How often should I replace a kitchen sponge?", "Replace kitchen sponges every one to two weeks."),
]

BLACKLISTS = {
    "dangerous.txt": ["# Tasks we refuse outright", "bomb", "explosive", "explosives", "make a weapon", "gunpowder",
                      "meth", "poison someone", "hurt myself", "hurt someone", "kill", "napalm", "pipe bomb",
                      "molotov cocktail", "overdose", "self harm"],
    "professional.txt": ["# Tasks that need a licensed professional", "electrical panel", "breaker box",
                         "rewire", "rewire my house", "gas line", "gas leak", "asbestos", "load bearing wall",
                         "roof repair", "septic tank", "main water line", "furnace repair", "chimney repair"],
    "profanity.txt": ["# Offensive words", "damn", "crap", "shit", "fuck", "fucking", "bitch", "asshole", "bastard",
                      "piss off", "dumbass"],
}

ASR_RULES = [
    ("wrong", "right", "phases"),
    ("pre heat", "preheat", "TaskSearch|TaskPreparation|TaskExecution"),
    ("table spoon", "tablespoon", "TaskPreparation|TaskExecution"),
    ("tea spoon", "teaspoon", "TaskPreparation|TaskExecution"),
    ("dry wall", "drywall", "TaskSearch|TaskExecution"),
    ("paste a", "pasta", "TaskSearch"),
    ("wreck a pee", "recipe", "TaskSearch"),
    ("neck step", "next step", "TaskExecution"),
    ("necks", "next", "TaskExecution"),
    ("go to step for", "go to step four", "TaskExecution"),
    ("go to step to", "go to step two", "TaskExecution"),
    ("star", "start", "TaskPreparation"),
    ("bubbly tea", "bubble tea", "TaskSearch"),
    ("boba t", "bubble tea", "TaskSearch"),
    ("guac a mole", "guacamole", "TaskSearch"),
    ("time her", "timer", "TaskExecution"),
]

QA_EVAL_EXTRA = [
    ("Bake for about 37 minutes. Check by inserting a toothpick in the center. It should come out clean.",
     "How long do I bake it?", "Bake for about 37 minutes."),
    ("Knead the dough for 8 minutes until smooth and elastic. Add flour a spoonful at a time if it sticks to your hands.",
     "How long should I knead the dough?", "Knead the dough for 8 minutes until smooth and elastic."),
    ("Preheat the oven to 425 degrees F. Line a sheet pan with parchment.",
     "What temperature should the oven be?", "Preheat the oven to 425 degrees F."),
    ("Let it dry for at least 4 hours, then apply a second coat.",
     "How long does the paint need to dry?", "Let it dry for at least 4 hours, then apply a second coat."),
    ("Chill the base in the fridge for at least 2 hours.",
     "Who won the football game yesterday?", "[No Answer]"),
    ("Heat oil in a wok or large skillet over high heat until it shimmers.",
     "What is the capital of Peru?", "[No Answer]"),
]

BLANCH_CONTEXT = ("Blanch the tomatoes. Drop a few tomatoes into the boiling water. Let them blanch for about 30 "
                  "seconds. Remove the tomatoes and place them on a cutting board to cool. Repeat with the remaining "
                  "tomatoes. Don't leave them in any longer or they start to cook. Blanching loosens their skins, but "
                  "if they are left in too long they turn mushy. Use tongs or a slotted spoon to lift them out of the "
                  "water.")


def qa_eval():
    out = [
        {"context": BLANCH_CONTEXT, "question": "Sorry, how long for blanching?",
         "gold_answer": "Let them blanch for about 30 seconds."},
        {"context": BLANCH_CONTEXT, "question": "What do I use to take them out of the water?",
         "gold_answer": "Use tongs or a slotted spoon to lift them out of the water."},
        {"context": BLANCH_CONTEXT, "question": "Why do I need to cut an X on the tomatoes?",
         "gold_answer": "[No Answer]"},
    ]
    out += [{"context": c, "question": q, "gold_answer": g} for c, q, g in QA_EVAL_EXTRA]
    return out


def intent_spec():
    return {
        "templates": INTENT_TEMPLATES,
        "slot_values": {
            "dish": DISHES, "technique": TECHNIQUES, "cook_verb": COOK_VERBS, "diy_task": DIY_TASKS, "ingredient": INGREDIENTS,
            "duration": DURATIONS, "item": ITEMS, "number": NUMBERS, "step_thing": STEP_THINGS,
            "step_verb": STEP_VERBS, "gerund": GERUNDS,
        },
        "noise_tokens": NOISE,
        "domain_slots": {"dish": "cooking", "technique": "cooking", "diy_task": "diy"},
        "mix_probability": 0.3,
        "noise_probability": 0.1,
    }


def question_spec():
    return {
        "templates": QUESTION_TEMPLATES,
        "slot_values": {
            "dish": DISHES, "ingredient": INGREDIENTS, "step_thing": STEP_THINGS, "step_verb": STEP_VERBS,
            "gerund": GERUNDS,
        },
        "noise_tokens": ["sorry", "um", "alexa", "quick question"],
        "mix_probability": 0.0,
        "noise_probability": 0.15,
        "intent_labels": False,
    }


def templates():
    return {
        "responders": {k: {"slots": s, "variants": v} for k, (s, v) in sorted(RESPONDERS.items())},
        "favorites": [
            {"task_id": "cook-003", "blurb": "A sweet drink that people keep coming back to."},
            {"task_id": "diy-002", "blurb": "A weekend classic that saves a trip to the car wash."},
            {"task_id": "cook-005", "blurb": "The best use for bananas that are past their prime."},
            {"task_id": "diy-016", "blurb": "Fresh herbs all year on a sunny windowsill."},
            {"task_id": "cook-014", "blurb": "Cozy, quick and great with a sandwich."},
            {"task_id": "diy-021", "blurb": "A relaxing project that makes a nice gift."},
        ],
    }


def case(name, *turns):
    out = []
    for t in turns:
        turn = dict(t)
        out.append(turn)
    return name, {"name": name, "turns": out}


CASES = [
    case("favorites",
         {"utterance": "tell me your favorites", "require": ["recipe", "task", "favorite"],
          "forbid": ["sorry", "don't understand"], "expect_state": "catalog"}),
    case("cancel_during_step",
         {"utterance": "how to wash a car", "expect_state": "catalog"},
         {"utterance": "the first one", "expect_state": "overview"},
         {"utterance": "start", "require": ["step 1"], "expect_state": "step"},
         {"utterance": "cancel", "require": ["you can say"], "forbid_repeat": True, "expect_state": "step"}),
    case("bubble_tea_walkthrough",
         {"utterance": "Search bubble tea recipe for me.", "expect_state": "clarification"},
         {"utterance": "no preference", "require": ["bubble tea"], "expect_state": "catalog"},
         {"utterance": "the first one", "expect_state": "overview"},
         {"utterance": "let's start", "require": ["step 1 of"], "expect_state": "step"},
         {"utterance": "how much brown sugar do i need", "require": ["3 tablespoons"], "expect_state": "step"},
         {"utterance": "next", "require": ["step 2 of"], "expect_state": "step"},
         {"utterance": "stop", "expect_end": True, "expect_state": "halt"}),
    case("blanching_question",
         {"utterance": "how to peel tomatoes", "expect_state": "clarification"},
         {"utterance": "vegan please", "require": ["tomatoes"], "expect_state": "catalog"},
         {"utterance": "the first one", "expect_state": "overview"},
         {"utterance": "go to step 3", "require": ["step 3 of"], "expect_state": "step"},
         {"utterance": "sorry, how long for blanching?", "require": ["30 seconds"], "expect_state": "step"}),
    case("dangerous_request",
         {"utterance": "how to make a pipe bomb", "require": ["can't help"], "expect_end": True}),
    case("professional_request",
         {"utterance": "how do i rewire my electrical panel", "require": ["professional"], "expect_state": "welcome"}),
    case("shopping_list_and_timer",
         {"utterance": "add milk to my shopping list", "require": ["milk"]},
         {"utterance": "set a timer for 5 minutes", "require": ["5 minutes"]}),
    case("help_and_repeat",
         {"utterance": "help", "require": ["you can say"], "expect_state": "welcome"},
         {"utterance": "say that again", "require": ["you can say"]}),
    case("navigation_bounds",
         {"utterance": "how do i fix a leaky faucet", "expect_state": "catalog"},
         {"utterance": "number one", "expect_state": "overview"},
         {"utterance": "start", "expect_state": "step"},
         {"utterance": "go back", "require": ["first step"], "expect_state": "step"},
         {"utterance": "go to step 9", "require": ["only has"], "expect_state": "step"},
         {"utterance": "i'm done", "require": ["leaky faucet"], "expect_state": "completed"}),
    case("substitute_question",
         {"utterance": "find me a recipe for chocolate fudge", "expect_state": "clarification"},
         {"utterance": "no preference", "expect_state": "catalog"},
         {"utterance": "the first one", "require": ["fudge"], "expect_state": "overview"},
         {"utterance": "start", "expect_state": "step"},
         {"utterance": "I don't have condensed milk, can I use something else?", "require": ["evaporated milk"]},
         {"utterance": "How much cocoa powder do I need?", "require": ["1/4 cup"]}),
]


def main():
    docs = build_corpus()
    dump(DATA / "corpus.json", docs)
    dump(DATA / "substitutions.json", SUBSTITUTIONS)
    dump(DATA / "faqs.json", [{"question": q, "answer": a} for q, a in GLOBAL_FAQS])
    for name, lines in BLACKLISTS.items():
        (DATA / "blacklists").mkdir(parents=True, exist_ok=True)
        (DATA / "blacklists" / name).write_text("\n".join(lines) + "\n")
    (DATA / "asr_rules.csv").write_text("\n".join(",".join(r) for r in ASR_RULES) + "\n")
    dump(DATA / "templates.json", templates())
    dump(DATA / "simulator" / "intents.json", intent_spec())
    dump(DATA / "simulator" / "questions.json", question_spec())
    train, evals = build_weak_labels(docs)
    dump(DATA / "search" / "weak_labels_train.json", train)
    dump(DATA / "search" / "weak_labels_eval.json", evals)
    dump(DATA / "qa" / "qa_eval.json", qa_eval())
    conv = ROOT / "tests" / "conversations"
    conv.mkdir(parents=True, exist_ok=True)
    for name, body in CASES:
        dump(conv / f"{name}.json", body)
    print(f"{len(docs)} documents, {len(train)} train queries, {len(evals)} eval queries, {len(CASES)} cases")


if __name__ == "__main__":
    main()
