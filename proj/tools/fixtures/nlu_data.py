"""Simulator templates and slot values."""

DISHES = [
    "bubble tea", "banana bread", "chocolate chip cookies", "pancakes", "guacamole", "spaghetti carbonara",
    "chicken tikka masala", "vegetable stir fry", "beef tacos", "margherita pizza", "pizza dough", "tomato soup",
    "basil pesto", "roast chicken", "lemon bars", "iced coffee", "coffee cake", "garlic bread", "coleslaw",
    "roasted potatoes", "cornbread", "grilled cheese", "lasagna", "chicken noodle soup", "mushroom risotto",
    "pad thai", "hummus", "greek salad", "overnight oats", "blueberry muffins", "apple pie", "shrimp scampi",
    "beef stew", "black bean burgers", "an omelette", "salmon teriyaki", "fried rice", "a strawberry smoothie",
    "caesar salad", "mac and cheese", "vegetable curry", "beef and broccoli", "granola", "crepes",
    "chocolate lava cake", "hot chocolate", "fried noodles", "salsa", "ice cream", "bruschetta", "steak",
    "quinoa salad", "falafel", "miso soup", "chocolate fudge", "french toast", "waffles", "brownies",
    "carrot cake", "cheesecake", "chili", "meatballs", "pulled pork", "fish tacos", "ramen", "sushi rolls",
    "dumplings", "spring rolls", "butter chicken", "naan", "paella", "gazpacho", "ratatouille", "quiche",
    "scrambled eggs", "potato salad", "mashed potatoes", "sweet potato fries", "chicken wings", "burritos",
    "enchiladas", "nachos", "tiramisu", "panna cotta", "lemonade", "sangria", "a milkshake", "cinnamon rolls",
    "sourdough bread", "focaccia", "bagels", "pho", "kimchi fried rice", "bibimbap", "tomato sauce",
    "peeled tomatoes", "egg salad", "tuna salad", "chicken curry", "lentil soup", "minestrone", "pumpkin pie",
    "peanut butter cookies", "oatmeal cookies", "sugar cookies", "pound cake", "a chocolate cake",
    "vanilla cupcakes", "donuts", "churros", "chicken parmesan", "eggplant parmesan", "stuffed peppers",
    "shepherd's pie", "pot roast", "clam chowder", "shrimp fried rice", "teriyaki chicken", "avocado toast",
]

TECHNIQUES = [
    "peel tomatoes", "blanch tomatoes", "boil eggs", "poach an egg", "cook rice", "chop an onion",
    "sear a steak", "make a roux", "caramelize onions", "knead dough", "temper chocolate", "mince garlic",
    "roast vegetables", "brown butter", "whip cream", "proof yeast", "zest a lemon", "julienne carrots",
    "steam broccoli", "toast pine nuts", "cook quinoa", "make simple syrup", "brew cold brew coffee",
    "soften butter", "separate eggs", "deglaze a pan", "cook pasta al dente", "grill corn",
]

COOK_VERBS = ["make", "cook", "bake", "prepare", "whip up"]

DIY_TASKS = [
    "wash a car", "wash my car", "remove spray paint", "remove spraypaint from concrete", "unclog a drain",
    "fix a leaky faucet", "paint a room", "paint my bedroom", "hang a picture", "patch drywall",
    "change a flat tire", "clean a coffee maker", "remove coffee stains", "get wine out of a carpet",
    "remove grease stains", "season a cast iron pan", "sharpen a knife", "build a raised garden bed",
    "grow basil", "grow tomatoes", "plant a lemon tree", "build a fire pit", "make a bird feeder",
    "make candles", "make a vinegar cleaner", "clean the oven", "clean a blender", "unclog the kitchen sink",
    "recaulk the bathtub", "install a shelf", "fix a squeaky door", "clean windows", "remove rust",
    "paint kitchen cabinets", "stain a deck", "build a bookshelf", "fix a running toilet", "clean grout",
    "make an ice pack", "make a garlic spray for plants", "repot a plant", "start composting",
    "organize my pantry", "clean the microwave", "descale a kettle", "clean the fridge", "replace a showerhead",
    "build a birdhouse", "clean stainless steel", "get candle wax out of fabric", "weatherstrip a door",
    "make a terrarium", "wash pillows", "fix a bike chain", "change a light bulb", "mow the lawn",
    "prune roses", "lay tile", "install a ceiling fan", "fix a zipper", "sew a button", "iron a shirt",
    "clean a mattress", "remove a stripped screw", "hang curtains", "assemble a desk", "fix a wobbly table",
    "remove wallpaper", "clean gutters", "pressure wash a patio", "build a planter box", "refinish a dresser",
    "fix a flat bike tire", "clean leather boots", "polish silver", "remove mold from a shower",
    "get rid of fruit flies", "clean a cast iron skillet", "fold a fitted sheet", "clean a dishwasher",
    "unclog a garbage disposal", "wrap a present", "make a wreath", "knit a scarf", "build a shed",
    "insulate an attic", "fix a cracked phone screen", "clean a keyboard", "remove ink stains",
    "remove sweat stains", "clean suede shoes", "grow herbs indoors", "plant a vegetable garden",
    "paint a fence", "install a doorbell", "caulk a window", "hang a mirror", "clean a grill",
    "clean the coffee pot", "remove coffee spots from a rug", "get stains out of a tablecloth",
]

INGREDIENTS = [
    "butter", "eggs", "milk", "sugar", "brown sugar", "flour", "baking soda", "baking powder", "condensed milk",
    "sweetened condensed milk", "cocoa powder", "heavy cream", "sour cream", "buttermilk", "vanilla extract",
    "garlic", "onion", "olive oil", "soy sauce", "parmesan cheese", "tapioca pearls", "black tea", "lemons",
    "yogurt", "honey", "cornstarch", "yeast", "tomatoes", "basil", "cinnamon",
]

DURATIONS = ["5 minutes", "ten minutes", "30 seconds", "1 hour", "two minutes", "15 minutes", "an hour",
             "90 seconds", "twenty minutes", "3 minutes"]

ITEMS = ["milk", "eggs", "butter", "paper towels", "sponges", "garlic", "olive oil", "sandpaper", "dish soap",
         "white vinegar", "flour", "tapioca pearls", "lemons", "screws", "paint rollers"]

NUMBERS = ["1", "2", "3", "4", "5", "one", "two", "three", "four", "five", "six"]

STEP_THINGS = ["tomatoes", "dough", "sauce", "batter", "chicken", "pan", "paint", "caulk", "water", "mixture"]
STEP_VERBS = ["boil", "bake", "simmer", "knead", "stir", "soak", "scrub", "let it dry", "chill", "rest"]
GERUNDS = ["blanching", "baking", "boiling", "simmering", "soaking", "drying", "chilling", "resting", "kneading"]

NOISE = ["um", "uh", "alexa", "okay so", "hmm", "well"]

INTENT_TEMPLATES = {
    "affirm": ["yes", "yeah", "sure", "ok", "okay", "yes please", "sounds good", "let's do it", "that one",
               "alright", "yep", "of course", "go ahead", "perfect", "that sounds great", "yes that one"],
    "negate": ["no", "nope", "no thanks", "not really", "nah", "i don't think so", "not that one",
               "cancel", "never mind", "forget it", "no way", "no i don't"],
    "task_request": [
        "how to <{diy_task}>", "how do i <{diy_task}>", "i want to know how to <{diy_task}>",
        "help me <{diy_task}>", "i need to <{diy_task}>", "can you show me how to <{diy_task}>",
        "search <{dish}> recipe for me", "find me a recipe for <{dish}>", "<{dish}> recipe",
        "i want to <{cook_verb} {dish}>", "how do i <{cook_verb} {dish}>", "show me <{dish}> recipes",
        "teach me how to <{diy_task}>", "i'd like to learn how to <{diy_task}>", "look up <{dish}>",
        "what's the best way to <{diy_task}>", "i'm looking for <{dish}>", "recipes for <{dish}> please",
        "could you tell me how to <{cook_verb} {dish}>", "give me instructions for <{diy_task}>",
        "let's <{cook_verb} {dish}>", "how can i <{diy_task}>", "search for <{dish}>",
        "find <{dish}> recipes", "what do you recommend", "recommend something", "show me my favorites",
        "any suggestions for dinner", "i want to try <{dish}>", "how about <{dish}>",
        "what's a good way to <{diy_task}>", "i'd like to <{cook_verb} {dish}>", "i want to learn how to <{diy_task}>",
        "directions for <{diy_task}>", "what about <{dish}>", "i need a recipe for <{dish}>",
        "do you have <{dish}> recipes", "look for <{dish}> recipes please", "how to <{technique}>",
        "how do i <{technique}>", "show me how to <{technique}>", "i want to learn to <{technique}>",
        "what's the best way to <{technique}>",
    ],
    "navigation": ["next", "next step", "go back", "previous step", "go to step {number}",
                   "skip to step {number}", "show me more", "more options", "what's next", "continue",
                   "keep going", "move on", "back", "go to the previous step", "take me to step {number}",
                   "the next one please"],
    "detail_request": ["tell me more", "more details", "can you explain that step", "give me more detail",
                       "explain that", "elaborate please", "compare them", "how do they compare",
                       "more info please", "details please", "what are the details"],
    "task_complete": ["i'm done", "i finished", "all done", "finished", "i finished the last step",
                      "i completed the task", "we're done here", "done with the recipe", "i'm finished",
                      "that's done"],
    "stop": ["stop", "exit", "quit", "goodbye", "bye", "stop the task", "turn off", "i'm done talking",
             "end the conversation", "shut up"],
    "repeat": ["repeat that", "say that again", "what did you say", "come again", "repeat please",
               "can you repeat that", "one more time", "repeat the step", "pardon"],
    "help": ["help", "what can i say", "what can you do", "i'm confused", "i need help",
             "how does this work", "help me please", "what are my options"],
    "question": [
        "how long do i {step_verb} the {step_thing}", "what temperature should the oven be",
        "how much {ingredient} do i need", "can i use something else instead of {ingredient}",
        "what can i use instead of {ingredient}", "sorry how long for {gerund}", "what tools do i need",
        "why do i need to {step_verb}", "is it safe to {step_verb} it", "how many {ingredient} does it call for",
        "when is the {step_thing} ready", "what should the {step_thing} look like", "can i freeze this",
        "how long will it keep", "what does {gerund} do", "do i need {ingredient}",
        "how many calories are in this", "where does this dish come from", "is there a substitute for {ingredient}",
        "what size pan should i use", "where do i put the {step_thing}", "why does it say to {step_verb}",
        "which {ingredient} should i buy", "who makes the best {ingredient}", "where can i buy {ingredient}",
        "what does it mean to {step_verb}", "when do i add the {ingredient}", "how hot should the pan be",
        "how many people does this serve", "what if i don't have {ingredient}", "what happens if i {step_verb} too long",
        "should i cover the {step_thing}", "does the {step_thing} need to cool", "how thick should the {step_thing} be",
        "what kind of {ingredient} works best", "is the {step_thing} supposed to be sticky",
    ],
    "list": ["add {item} to my shopping list", "put {item} on the list", "remove {item} from my list",
             "take {item} off my shopping list", "add {item} to the list", "i need to buy {item} add it to my list",
             "put {item} on my shopping list", "delete {item} from the shopping list"],
    "timer": ["set a timer for {duration}", "start a {duration} timer", "pause the timer", "resume the timer",
              "cancel the timer", "timer for {duration}", "set timer {duration}", "stop the timer",
              "set a {duration} timer please", "can you time {duration}"],
    "ignore": ["the weather is nice today", "my dog is barking", "what's your name", "i like turtles",
               "tell me a joke", "who won the game last night", "blah blah", "sing a song", "the kids are home",
               "where did i put my keys", "i love this kitchen", "my phone is ringing", "good morning to you too",
               "the neighbors are loud", "i had a long day", "it's raining again", "my favorite color is blue",
               "did you hear that noise", "what time is it in tokyo", "i'm going to the store later",
               "that's funny", "the oven is new", "my sister is visiting"],
}

QUESTION_TEMPLATES = {
    "mrc": ["how long do i {step_verb} the {step_thing}", "what temperature should the oven be at",
            "sorry how long for {gerund}", "what tools do i need for this step", "what should the {step_thing} look like",
            "how do i know when the {step_thing} is ready", "what do i do with the {step_thing}",
            "how long should i {step_verb} it", "what do i use to lift them out", "how hot should the pan be",
            "why do i need to {step_verb}", "what should i use to {step_verb} it", "how many times do i repeat this",
            "what goes in next", "where do i put the {step_thing}"],
    "faq": ["can i freeze this", "how long will it keep", "can i make this ahead", "is this safe for kids",
            "how many does it serve", "can i double the recipe", "how long does this take",
            "can i store leftovers", "is this hard to do", "do i need special equipment",
            "can i do this in the rain", "how often should i do this"],
    "factual": ["who invented {dish}", "how many calories are in {dish}", "where does {dish} come from",
                "what is the capital of france", "what year was {dish} invented", "who is the president",
                "how tall is mount everest", "what is the population of canada", "when was the first car made",
                "how far away is the moon"],
    "ingredient": ["how much {ingredient} do i need", "how many {ingredient} does it call for",
                   "do i need {ingredient}", "what amount of {ingredient} goes in",
                   "how much {ingredient} should i use", "is there {ingredient} in this",
                   "how many cups of {ingredient}", "does the recipe use {ingredient}"],
    "substitute": ["what can i use instead of {ingredient}", "i don't have {ingredient} can i use something else",
                   "is there a substitute for {ingredient}", "can i swap the {ingredient}",
                   "what can replace {ingredient}", "i ran out of {ingredient}",
                   "what's a good alternative to {ingredient}", "can i skip the {ingredient}"],
}
