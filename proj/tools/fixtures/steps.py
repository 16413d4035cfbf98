"""Step text builders for fixture records."""


def names(ings):
    return [n for _, n in ings]


def listing(items):
    items = list(items)
    if len(items) == 1:
        return items[0]
    return ", ".join(items[:-1]) + " and " + items[-1]


BLANCH_STEPS = [
    "Bring a large pot of water to a boil. Fill a large bowl with ice water and set it next to the stove.",
    "Score the tomatoes. Cut a shallow X into the bottom of each tomato with a paring knife. "
    "Tip: Scoring helps the skin split cleanly.",
    "Blanch the tomatoes. Drop a few tomatoes into the boiling water. Let them blanch for about 30 seconds. "
    "Remove the tomatoes and place them on a cutting board to cool. Repeat with the remaining tomatoes. "
    "Don't leave them in any longer or they start to cook. Blanching loosens their skins, but if they are "
    "left in too long they turn mushy. Use tongs or a slotted spoon to lift them out of the water.",
    "Shock the tomatoes in the ice water for one minute. This stops the cooking right away.",
    "Peel the skins off starting at the scored X. The skin should slip off easily with your fingers. "
    "Note: If a skin sticks, return that tomato to the boiling water for 10 more seconds.",
    "Core and chop the peeled tomatoes. Use them right away in sauce or store them in the fridge for up to three days.",
]


def cooking_steps(title, style, ings, minutes):
    ns = names(ings)
    main = ns[0]
    rest = ns[1:] or ns
    t = title.lower()
    if style == "blanch":
        return list(BLANCH_STEPS)
    if style == "bake":
        return [
            f"Preheat the oven to 350 degrees F. Grease a baking pan and set it aside.",
            f"Mix the dry ingredients. Whisk the {main} with the other dry ingredients in a large bowl. "
            "Tip: Sift lumpy flour before measuring.",
            f"Combine the wet ingredients. Beat the {listing(rest[:3])} in a second bowl until smooth. "
            "Bring cold ingredients to room temperature first so they blend evenly.",
            f"Fold the wet mixture into the dry mixture. Stir just until combined. A few streaks are fine. "
            "Overmixing makes the texture tough and dense, so stop as soon as you no longer see dry pockets.",
            f"Bake for about {max(10, minutes // 2)} minutes. Check by inserting a toothpick in the center. "
            "It should come out clean.",
            f"Cool the {t} on a rack for 10 minutes before serving. "
            "Note: Store leftovers in an airtight container for up to three days.",
        ]
    if style == "nocook":
        return [
            f"Gather the {listing(ns)}. Wash and dry any fresh produce.",
            f"Prepare the {main}. Cut or measure it into a large bowl.",
            f"Add the {listing(rest)}. Mix gently until everything is evenly combined. "
            "Tip: Taste and adjust the seasoning before serving.",
            f"Chill for at least 15 minutes, then serve the {t}.",
        ]
    if style == "drink":
        return [
            f"Prepare the {main}. Follow the package directions if it needs cooking or brewing.",
            f"Add the {listing(rest)} to a tall glass. Stir until the sweetener dissolves.",
            "Combine everything and stir well. Add ice if you like it cold. "
            "Tip: Chill the glass in the freezer for five minutes first.",
            f"Serve the {t} right away.",
        ]
    if style == "griddle":
        return [
            f"Heat a griddle or large skillet over medium heat for about 5 minutes.",
            f"Mix the {listing(ns[:3])} in a bowl until just combined. A few lumps are fine.",
            "Grease the griddle lightly with butter. Cook each side for 2 to 3 minutes until golden. "
            "Flip when bubbles form on the surface and the edges look set. Tip: Keep finished pieces warm in a low oven.",
            f"Serve the {t} hot.",
        ]
    if style in ("pasta", "simmer", "soup"):
        return [
            f"Prep the {listing(ns[:3])}. Chop everything into bite size pieces.",
            f"Heat a large pot over medium heat. Cook the {main} for 5 to 7 minutes, stirring often.",
            f"Add the {listing(rest)} and bring to a gentle simmer. Cook for about {max(10, minutes // 3)} minutes. "
            "Stir now and then so nothing sticks to the bottom. Tip: Keep the heat low once it simmers.",
            "Taste and season with salt and pepper. Add a splash of water if it gets too thick.",
            f"Serve the {t} warm.",
        ]
    if style in ("stirfry", "skillet", "fry"):
        return [
            f"Slice the {main} and prep the {listing(rest[:3])} before you turn on the heat. "
            "Stir frying moves fast.",
            f"Heat oil in a wok or large skillet over high heat until it shimmers.",
            f"Cook the {main} for 3 to 4 minutes, then move it to a plate. "
            "Tip: Do not crowd the pan or the food steams instead of browning.",
            f"Add the {listing(rest)} to the pan and cook for 2 minutes. Return the {main} and toss everything together.",
            f"Serve the {t} immediately.",
        ]
    if style == "dough":
        return [
            f"Dissolve the yeast in the warm water. Let it stand for 5 minutes until foamy.",
            f"Mix in the {listing(ns)}. Stir until a shaggy dough forms.",
            "Knead the dough for 8 minutes until smooth and elastic. "
            "Tip: Add flour a spoonful at a time if it sticks to your hands.",
            "Cover the bowl and let the dough rise for 1 hour or until doubled.",
            "Punch down the dough and shape it. It is ready to top and bake.",
        ]
    if style == "blend":
        return [
            f"Add the {main} to a blender or food processor.",
            f"Add the {listing(rest)}. Pulse a few times to break everything up.",
            "Blend until smooth, scraping down the sides once. Tip: Add a little water if it is too thick.",
            f"Taste, adjust the salt and serve the {t}.",
        ]
    if style == "roast":
        return [
            "Preheat the oven to 425 degrees F. Line a sheet pan with parchment.",
            f"Toss the {main} with the {listing(rest)}. Spread it out in a single layer.",
            f"Roast for about {max(15, minutes // 2)} minutes, turning once halfway through. "
            "Tip: A crowded pan steams instead of roasting.",
            f"Rest the {t} for 5 minutes before serving.",
        ]
    if style == "churn":
        return [
            f"Whisk the {listing(ns)} until the sugar dissolves.",
            "Chill the base in the fridge for at least 2 hours.",
            "Churn the base in an ice cream maker for 20 to 25 minutes. Tip: Freeze the bowl overnight first.",
            "Transfer to a container and freeze for 2 hours until firm.",
        ]
    raise ValueError(style)


def diy_steps(title, kind, mats):
    ns = names(mats)
    main = ns[0]
    t = title.lower()
    if kind == "clean":
        return [
            f"Gather the {listing(ns)}. Open a window for ventilation.",
            f"Test the {main} on a small hidden spot first to make sure it does no damage.",
            f"Apply the {main} to the area. Let it sit for about 10 minutes to loosen the mess. "
            "Tip: Work in small sections.",
            f"Scrub gently, then rinse with clean water. Repeat if any marks remain. "
            "Blot or wipe in one direction rather than rubbing in circles, which can spread the stain further.",
            "Dry the surface completely with a clean cloth.",
        ]
    if kind == "repair":
        return [
            f"Gather the {listing(ns)}. Shut off any water or power that feeds the area.",
            f"Inspect the problem closely to find the worn or blocked part.",
            f"Use the {main} to remove or clear the damaged part. Keep small pieces in a cup so they do not get lost. "
            "Tip: Take a photo before you take anything apart.",
            f"Install the new part or reassemble everything in reverse order. Tighten by hand first, then snug it with the {ns[-1]}.",
            "Restore water or power and test the repair. Check again after a day.",
        ]
    if kind == "paint":
        return [
            f"Gather the {listing(ns)}. Cover floors and nearby surfaces.",
            "Clean and lightly sand the surface so the new coat sticks.",
            f"Apply a thin first coat with the {ns[2] if len(ns) > 2 else main}. Work from top to bottom. "
            "Tip: Two thin coats look better than one thick coat.",
            "Let it dry for at least 4 hours, then apply a second coat.",
            "Remove the tape while the last coat is still slightly wet for clean edges.",
        ]
    if kind == "build":
        return [
            f"Gather the {listing(ns)}. Measure the space and mark your layout with a pencil.",
            f"Cut or arrange the {main} to size. Measure twice before cutting.",
            f"Assemble the pieces and fasten them securely. Check that everything is level. "
            "Tip: Pre-drill holes to keep wood from splitting.",
            "Sand any rough edges and finish the surface if needed.",
            f"Put the {t.split(' ', 1)[-1]} in place and check that it is stable.",
        ]
    if kind == "maintain":
        return [
            f"Gather the {listing(ns)}. Clean and dry the item completely.",
            f"Prepare the {main}. Follow any soaking or heating directions first.",
            "Work slowly and evenly across the whole surface. Keep a steady angle. "
            "Tip: Consistent pressure matters more than speed.",
            "Wipe off any residue and test the result.",
            "Repeat the process every few months to keep it in good shape.",
        ]
    if kind == "garden":
        return [
            f"Gather the {listing(ns)}. Choose a spot with at least six hours of sun.",
            f"Prepare the {ns[1] if len(ns) > 1 else main}. Loosen the soil and water it lightly.",
            f"Plant or apply the {main}. Press the soil gently around it. "
            "Tip: Water in the morning so leaves dry before night.",
            "Water deeply once a week, more often in hot weather.",
            "Check for pests and yellow leaves every few days.",
        ]
    if kind == "craft":
        return [
            f"Gather the {listing(ns)}. Cover your work surface.",
            f"Prepare the {main}. Measure it carefully.",
            f"Combine the {listing(ns[1:] or ns)} with the {main}. "
            "Tip: Label anything you store so nobody mistakes it for food.",
            "Let it set or dry completely before use.",
            f"Your {t.replace('make ', '', 1)} is ready to use.",
        ]
    raise ValueError(kind)
