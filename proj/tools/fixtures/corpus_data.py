"""Hand-written task records for the fixture corpus."""

# (title, cuisine, diet, minutes, style, [(quantity, ingredient)], extra_queries)
COOKING = [
    ("Peel Tomatoes by Blanching", ["italian"], ["vegan", "vegetarian", "gluten-free"], 20, "blanch",
     [("6", "roma tomatoes"), ("1 tablespoon", "salt"), ("1 bowl", "ice water")],
     ["skin tomatoes quickly", "peeling tomatoes"]),
    ("Easy Chocolate Fudge", ["american"], ["vegetarian", "gluten-free"], 130, "nocook",
     [("1 can (14 ounces)", "sweetened condensed milk"), ("1/4 cup", "cocoa powder"),
      ("2 cups", "semisweet chocolate chips"), ("2 tablespoons", "butter"), ("1 teaspoon", "vanilla extract")],
     ["fudge squares", "chocolate fudge with condensed milk"]),
    ("Brown Sugar Bubble Tea", ["taiwanese"], ["vegetarian"], 35, "drink",
     [("1/2 cup", "tapioca pearls"), ("2 bags", "black tea"), ("1 cup", "milk"), ("3 tablespoons", "brown sugar")],
     ["boba milk tea", "bubble teas"]),
    ("Fluffy Buttermilk Pancakes", ["american"], ["vegetarian"], 25, "griddle",
     [("2 cups", "all-purpose flour"), ("2 cups", "buttermilk"), ("2", "eggs"), ("2 tablespoons", "sugar"),
      ("2 teaspoons", "baking powder"), ("3 tablespoons", "butter")],
     ["buttermilk flapjacks", "making pancakes"]),
    ("Classic Banana Bread", ["american"], ["vegetarian"], 75, "bake",
     [("3", "ripe bananas"), ("1/3 cup", "butter"), ("3/4 cup", "sugar"), ("1", "egg"),
      ("1 teaspoon", "baking soda"), ("1 1/2 cups", "all-purpose flour")],
     ["baking banana loaf", "what to do with overripe bananas"]),
    ("Chewy Chocolate Chip Cookies", ["american"], ["vegetarian"], 40, "bake",
     [("2 1/4 cups", "all-purpose flour"), ("1 cup", "butter"), ("1 cup", "brown sugar"), ("2", "eggs"),
      ("2 cups", "semisweet chocolate chips"), ("1 teaspoon", "baking soda")],
     ["baked cookie with chocolate chunks", "choc chip biscuits"]),
    ("Fresh Guacamole", ["mexican"], ["vegan", "vegetarian", "gluten-free"], 10, "nocook",
     [("3", "avocados"), ("1", "lime"), ("1/2", "red onion"), ("1", "jalapeno"), ("2 tablespoons", "cilantro")],
     ["avocado dip for chips", "mashing avocados"]),
    ("Spaghetti Carbonara", ["italian"], [], 25, "pasta",
     [("1 pound", "spaghetti"), ("4 ounces", "pancetta"), ("3", "eggs"), ("1 cup", "parmesan cheese"),
      ("1 teaspoon", "black pepper")],
     ["pasta with egg and bacon", "roman noodles with pancetta"]),
    ("Chicken Tikka Masala", ["indian"], ["gluten-free"], 60, "simmer",
     [("1 1/2 pounds", "chicken thighs"), ("1 cup", "plain yogurt"), ("1 can", "tomato sauce"),
      ("1 cup", "heavy cream"), ("2 tablespoons", "garam masala"), ("4 cloves", "garlic")],
     ["creamy indian chicken curry", "tikka masalas"]),
    ("Vegetable Stir Fry", ["chinese"], ["vegan", "vegetarian"], 20, "stirfry",
     [("1", "red bell pepper"), ("1 head", "broccoli"), ("2", "carrots"), ("3 tablespoons", "soy sauce"),
      ("1 tablespoon", "sesame oil"), ("1 tablespoon", "ginger")],
     ["wok broccoli and carrots", "stir fried vegetables"]),
    ("Ground Beef Tacos", ["mexican"], [], 25, "skillet",
     [("1 pound", "ground beef"), ("8", "taco shells"), ("1 packet", "taco seasoning"), ("1 cup", "cheddar cheese"),
      ("1 cup", "lettuce"), ("1", "tomato")],
     ["taco tuesday dinner", "crunchy beef shells"]),
    ("Margherita Pizza", ["italian"], ["vegetarian"], 45, "bake",
     [("1 pound", "pizza dough"), ("1/2 cup", "tomato sauce"), ("8 ounces", "fresh mozzarella"),
      ("1 handful", "fresh basil"), ("1 tablespoon", "olive oil")],
     ["pizza with basil and mozzarella", "baking a simple pizza"]),
    ("Homemade Pizza Dough", ["italian"], ["vegan", "vegetarian"], 90, "dough",
     [("3 cups", "bread flour"), ("1 packet", "yeast"), ("1 cup", "warm water"), ("2 tablespoons", "olive oil"),
      ("1 teaspoon", "salt")],
     ["pizza base from scratch", "kneading pizza crust"]),
    ("Creamy Tomato Soup", ["american"], ["vegetarian", "gluten-free"], 40, "soup",
     [("2 cans", "whole tomatoes"), ("1", "onion"), ("2 cloves", "garlic"), ("2 cups", "vegetable broth"),
      ("1/2 cup", "heavy cream")],
     ["tomatoes soups", "soup for grilled cheese"]),
    ("Basil Pesto", ["italian"], ["vegetarian", "gluten-free"], 10, "blend",
     [("2 cups", "fresh basil"), ("1/3 cup", "pine nuts"), ("1/2 cup", "parmesan cheese"), ("2 cloves", "garlic"),
      ("1/2 cup", "olive oil")],
     ["green sauce with basil", "blending pesto"]),
    ("Lemon Garlic Roast Chicken", ["american"], ["gluten-free"], 100, "roast",
     [("1 whole", "chicken"), ("2", "lemons"), ("1 head", "garlic"), ("2 tablespoons", "butter"),
      ("1 tablespoon", "thyme")],
     ["roasting a whole bird", "sunday roast chicken"]),
    ("Lemon Bars", ["american"], ["vegetarian"], 70, "bake",
     [("1 cup", "butter"), ("2 cups", "all-purpose flour"), ("4", "eggs"), ("1 1/2 cups", "sugar"),
      ("2", "lemons")],
     ["tart lemon squares", "citrus shortbread bars"]),
    ("Iced Coffee", ["american"], ["vegan", "vegetarian", "gluten-free"], 10, "drink",
     [("2 cups", "brewed coffee"), ("1 tray", "coffee ice cubes"), ("1/2 cup", "milk"), ("2 tablespoons", "simple syrup")],
     ["cold coffee drink", "chilled coffees"]),
    ("Cinnamon Coffee Cake", ["american"], ["vegetarian"], 60, "bake",
     [("2 cups", "all-purpose flour"), ("1 cup", "sour cream"), ("1 cup", "sugar"), ("2 teaspoons", "cinnamon"),
      ("1/2 cup", "butter"), ("1/2 cup", "brewed coffee")],
     ["crumb cake for brunch", "coffee cakes"]),
    ("Garlic Bread", ["italian"], ["vegetarian"], 20, "bake",
     [("1 loaf", "french bread"), ("1/2 cup", "butter"), ("4 cloves", "garlic"), ("2 tablespoons", "parsley")],
     ["toasted bread with garlic butter", "garlicky toast"]),
    ("Vinegar Coleslaw", ["american"], ["vegan", "vegetarian", "gluten-free"], 15, "nocook",
     [("1 head", "green cabbage"), ("2", "carrots"), ("1/2 cup", "apple cider vinegar"), ("1/4 cup", "sugar")],
     ["tangy cabbage slaw", "coleslaws without mayo"]),
    ("Oven Roasted Potatoes", ["american"], ["vegan", "vegetarian", "gluten-free"], 50, "roast",
     [("2 pounds", "potatoes"), ("3 tablespoons", "olive oil"), ("1 teaspoon", "rosemary"), ("1 teaspoon", "salt")],
     ["crispy rosemary potatoes", "roasting potatoes"]),
    ("Skillet Cornbread", ["american"], ["vegetarian"], 35, "bake",
     [("1 cup", "cornmeal"), ("1 cup", "all-purpose flour"), ("1 cup", "buttermilk"), ("2", "eggs"),
      ("4 tablespoons", "butter")],
     ["cornmeal bread in cast iron", "southern cornbreads"]),
    ("Grilled Cheese Sandwich", ["american"], ["vegetarian"], 10, "griddle",
     [("2 slices", "sourdough bread"), ("2 slices", "cheddar cheese"), ("1 tablespoon", "butter")],
     ["toasted cheese sandwiches", "melty cheese toastie"]),
    ("Beef Lasagna", ["italian"], [], 110, "bake",
     [("12", "lasagna noodles"), ("1 pound", "ground beef"), ("2 cups", "ricotta cheese"),
      ("3 cups", "marinara sauce"), ("2 cups", "mozzarella cheese")],
     ["layered pasta bake", "lasagnas with meat sauce"]),
    ("Chicken Noodle Soup", ["american"], [], 50, "soup",
     [("1 pound", "chicken breast"), ("8 cups", "chicken broth"), ("2 cups", "egg noodles"), ("2", "carrots"),
      ("2 stalks", "celery")],
     ["soup for a cold", "chicken soups with noodles"]),
    ("Mushroom Risotto", ["italian"], ["vegetarian", "gluten-free"], 45, "simmer",
     [("1 1/2 cups", "arborio rice"), ("8 ounces", "mushrooms"), ("5 cups", "vegetable broth"),
      ("1/2 cup", "parmesan cheese"), ("1", "shallot")],
     ["creamy rice with mushrooms", "stirring risotto"]),
    ("Pad Thai", ["thai"], ["gluten-free"], 35, "stirfry",
     [("8 ounces", "rice noodles"), ("8 ounces", "shrimp"), ("2", "eggs"), ("3 tablespoons", "fish sauce"),
      ("2 tablespoons", "tamarind paste"), ("1/4 cup", "peanuts")],
     ["thai fried noodles", "noodles with tamarind and peanuts"]),
    ("Hummus", ["middle eastern"], ["vegan", "vegetarian", "gluten-free"], 10, "blend",
     [("1 can", "chickpeas"), ("1/4 cup", "tahini"), ("1", "lemon"), ("1 clove", "garlic"), ("2 tablespoons", "olive oil")],
     ["chickpeas and tahini dip", "blending hummus"]),
    ("Greek Salad", ["greek"], ["vegetarian", "gluten-free"], 15, "nocook",
     [("2", "tomatoes"), ("1", "cucumber"), ("1/2", "red onion"), ("4 ounces", "feta cheese"), ("1/2 cup", "olives")],
     ["salad with feta and olives", "greek salads"]),
    ("Overnight Oats", ["american"], ["vegetarian"], 5, "nocook",
     [("1/2 cup", "rolled oats"), ("1/2 cup", "milk"), ("1/4 cup", "greek yogurt"), ("1 tablespoon", "chia seeds"),
      ("1 tablespoon", "maple syrup")],
     ["no cook oatmeal", "soaked oats for breakfast"]),
    ("Blueberry Muffins", ["american"], ["vegetarian"], 35, "bake",
     [("2 cups", "all-purpose flour"), ("1 cup", "blueberries"), ("1/2 cup", "sugar"), ("1", "egg"),
      ("1 cup", "milk"), ("1/3 cup", "vegetable oil")],
     ["muffins with berries", "baking blueberry muffin"]),
    ("Apple Pie", ["american"], ["vegetarian"], 120, "bake",
     [("6", "apples"), ("2", "pie crusts"), ("3/4 cup", "sugar"), ("1 teaspoon", "cinnamon"), ("2 tablespoons", "butter")],
     ["baked fruit pie", "apple pies from scratch"]),
    ("Shrimp Scampi", ["italian"], [], 20, "skillet",
     [("1 pound", "shrimp"), ("4 cloves", "garlic"), ("1/2 cup", "white wine"), ("4 tablespoons", "butter"),
      ("8 ounces", "linguine")],
     ["garlic butter prawns", "shrimps with linguine"]),
    ("Red Wine Beef Stew", ["french"], [], 180, "simmer",
     [("2 pounds", "beef chuck"), ("2 cups", "red wine"), ("3", "carrots"), ("1 pound", "potatoes"),
      ("2 cups", "beef broth")],
     ["slow braised beef", "stewing beef in wine"]),
    ("Vegan Black Bean Burgers", ["american"], ["vegan", "vegetarian"], 30, "griddle",
     [("2 cans", "black beans"), ("1/2 cup", "breadcrumbs"), ("1/2", "onion"), ("1 teaspoon", "cumin"),
      ("4", "burger buns")],
     ["plant based patties", "bean burger"]),
    ("French Omelette", ["french"], ["vegetarian", "gluten-free"], 10, "skillet",
     [("3", "eggs"), ("1 tablespoon", "butter"), ("1 tablespoon", "chives"), ("1 pinch", "salt")],
     ["rolled eggs for breakfast", "omelettes"]),
    ("Salmon Teriyaki", ["japanese"], [], 25, "skillet",
     [("4 fillets", "salmon"), ("1/2 cup", "teriyaki sauce"), ("1 tablespoon", "honey"), ("1 teaspoon", "ginger")],
     ["glazed salmon fillets", "teriyaki fish"]),
    ("Chicken Fried Rice", ["chinese"], [], 25, "stirfry",
     [("3 cups", "cooked rice"), ("1 cup", "chicken breast"), ("2", "eggs"), ("1 cup", "frozen peas"),
      ("3 tablespoons", "soy sauce")],
     ["leftover rice dinner", "fried rices"]),
    ("Strawberry Smoothie", ["american"], ["vegetarian", "gluten-free"], 5, "blend",
     [("2 cups", "strawberries"), ("1", "banana"), ("1 cup", "greek yogurt"), ("1/2 cup", "milk")],
     ["strawberries and banana shake", "blending smoothies"]),
    ("Caesar Salad", ["american"], [], 20, "nocook",
     [("1 head", "romaine lettuce"), ("1 cup", "croutons"), ("1/2 cup", "parmesan cheese"),
      ("1/2 cup", "caesar dressing"), ("2", "anchovies")],
     ["romaine with croutons", "caesar salads"]),
    ("Baked Macaroni and Cheese", ["american"], ["vegetarian"], 50, "bake",
     [("1 pound", "elbow macaroni"), ("3 cups", "cheddar cheese"), ("3 cups", "milk"), ("1/4 cup", "butter"),
      ("1/4 cup", "all-purpose flour")],
     ["mac n cheese", "cheesy pasta casserole"]),
    ("Vegetable Curry", ["indian"], ["vegan", "vegetarian", "gluten-free"], 45, "simmer",
     [("1 can", "coconut milk"), ("2", "potatoes"), ("1 cup", "cauliflower"), ("2 tablespoons", "curry powder"),
      ("1 cup", "spinach")],
     ["coconut veggie curry", "curries without meat"]),
    ("Beef and Broccoli", ["chinese"], [], 30, "stirfry",
     [("1 pound", "flank steak"), ("1 head", "broccoli"), ("1/3 cup", "soy sauce"), ("1 tablespoon", "cornstarch"),
      ("2 cloves", "garlic")],
     ["takeout style beef", "broccoli beef"]),
    ("Homemade Granola", ["american"], ["vegan", "vegetarian"], 40, "roast",
     [("3 cups", "rolled oats"), ("1 cup", "almonds"), ("1/2 cup", "maple syrup"), ("1/3 cup", "coconut oil")],
     ["crunchy oat clusters", "granolas"]),
    ("Crepes", ["french"], ["vegetarian"], 30, "griddle",
     [("1 cup", "all-purpose flour"), ("2", "eggs"), ("1 1/4 cups", "milk"), ("2 tablespoons", "butter")],
     ["thin french pancakes", "crepe batter"]),
    ("Chocolate Lava Cake", ["french"], ["vegetarian"], 30, "bake",
     [("4 ounces", "dark chocolate"), ("1/2 cup", "butter"), ("2", "eggs"), ("1/4 cup", "sugar"),
      ("2 tablespoons", "all-purpose flour")],
     ["molten chocolate dessert", "lava cakes"]),
    ("Hot Chocolate", ["american"], ["vegetarian", "gluten-free"], 10, "drink",
     [("2 cups", "milk"), ("2 tablespoons", "cocoa powder"), ("2 tablespoons", "sugar"), ("1/4 teaspoon", "vanilla extract")],
     ["cocoa drink for winter", "hot cocoa"]),
    ("Egg Fried Noodles", ["chinese"], ["vegetarian"], 20, "stirfry",
     [("8 ounces", "egg noodles"), ("2", "eggs"), ("2", "green onions"), ("2 tablespoons", "soy sauce")],
     ["quick noodle stir fry", "fried noodle"]),
    ("Roasted Salmon with Herbs", ["american"], ["gluten-free"], 25, "roast",
     [("1 1/2 pounds", "salmon"), ("2 tablespoons", "dill"), ("1", "lemon"), ("2 tablespoons", "olive oil")],
     ["baked fish with dill", "oven salmon"]),
    ("Fire Roasted Salsa", ["mexican"], ["vegan", "vegetarian", "gluten-free"], 25, "blend",
     [("6", "tomatoes"), ("1", "jalapeno"), ("1/2", "white onion"), ("1", "lime"), ("2 tablespoons", "cilantro")],
     ["charred tomato dip", "salsas"]),
    ("Kitchen Sink Cookies", ["american"], ["vegetarian"], 35, "bake",
     [("2 cups", "all-purpose flour"), ("1 cup", "pretzels"), ("1 cup", "potato chips"),
      ("1 cup", "semisweet chocolate chips"), ("1 cup", "butter")],
     ["cookies with everything in them", "salty sweet cookie"]),
    ("Bird's Nest Cookies", ["american"], ["vegetarian"], 30, "nocook",
     [("2 cups", "chow mein noodles"), ("1 cup", "butterscotch chips"), ("1 cup", "jelly beans")],
     ["easter nest treats", "no bake nests"]),
    ("Vanilla Ice Cream", ["american"], ["vegetarian", "gluten-free"], 240, "churn",
     [("2 cups", "heavy cream"), ("1 cup", "whole milk"), ("3/4 cup", "sugar"), ("1 tablespoon", "vanilla extract")],
     ["churning ice cream", "frozen vanilla cream dessert"]),
    ("Tomato Basil Bruschetta", ["italian"], ["vegan", "vegetarian"], 20, "nocook",
     [("1 loaf", "baguette"), ("4", "tomatoes"), ("1/4 cup", "fresh basil"), ("2 tablespoons", "balsamic vinegar")],
     ["toasts topped with tomatoes", "bruschettas"]),
    ("Pan Seared Steak", ["american"], ["gluten-free"], 20, "skillet",
     [("2", "ribeye steaks"), ("2 tablespoons", "butter"), ("2 sprigs", "rosemary"), ("1 teaspoon", "black pepper")],
     ["cooking a steak in a pan", "seared steaks"]),
    ("Quinoa Salad", ["mediterranean"], ["vegan", "vegetarian", "gluten-free"], 25, "nocook",
     [("1 cup", "quinoa"), ("1", "cucumber"), ("1 cup", "cherry tomatoes"), ("1/4 cup", "lemon juice")],
     ["grain bowl salad", "quinoas"]),
    ("Falafel", ["middle eastern"], ["vegan", "vegetarian"], 60, "fry",
     [("2 cups", "dried chickpeas"), ("1", "onion"), ("1 cup", "parsley"), ("1 teaspoon", "cumin"),
      ("2 cups", "vegetable oil")],
     ["fried chickpea balls", "falafels"]),
    ("Miso Soup", ["japanese"], ["vegan", "vegetarian"], 15, "soup",
     [("4 cups", "dashi"), ("3 tablespoons", "miso paste"), ("8 ounces", "tofu"), ("2", "green onions")],
     ["japanese soup with tofu", "miso soups"]),
]

# (title, kind, [(quantity, material)], extra_queries)
DIY = [
    ("Remove Spray Paint from Concrete", "clean",
     [("1 bottle", "paint stripper"), ("1", "scrub brush"), ("1", "pressure washer"), ("1 pair", "rubber gloves")],
     ["get graffiti off a driveway", "removing spraypaint"]),
    ("Wash a Car by Hand", "clean",
     [("2", "buckets"), ("1 bottle", "car wash soap"), ("1", "wash mitt"), ("2", "microfiber towels")],
     ["washing my car", "cleaning a car at home"]),
    ("Unclog a Bathroom Drain", "repair",
     [("1", "plunger"), ("1/2 cup", "baking soda"), ("1 cup", "white vinegar"), ("1", "drain snake")],
     ["clogged drains", "slow draining sink fix"]),
    ("Fix a Leaky Faucet", "repair",
     [("1", "adjustable wrench"), ("1", "replacement cartridge"), ("1 roll", "plumber's tape"), ("1", "screwdriver")],
     ["dripping tap repair", "fixing faucets"]),
    ("Paint a Room", "paint",
     [("2 gallons", "interior paint"), ("1", "paint roller"), ("1 roll", "painter's tape"), ("1", "drop cloth")],
     ["painting walls", "repainting a bedroom"]),
    ("Hang a Picture Frame", "build",
     [("2", "picture hooks"), ("1", "hammer"), ("1", "level"), ("1", "pencil")],
     ["hanging art on the wall", "put up a picture on the wall"]),
    ("Patch a Hole in Drywall", "repair",
     [("1", "drywall patch kit"), ("1 tub", "spackle"), ("1", "putty knife"), ("1 sheet", "sandpaper")],
     ["fixing a wall hole", "drywalls repair"]),
    ("Change a Flat Tire", "repair",
     [("1", "spare tire"), ("1", "car jack"), ("1", "lug wrench"), ("1", "wheel wedge")],
     ["swap a flat", "changing tires"]),
    ("Clean a Coffee Maker with Vinegar", "clean",
     [("4 cups", "white vinegar"), ("4 cups", "water"), ("1", "paper filter")],
     ["descaling a coffee brewer", "coffee machine smells bad"]),
    ("Remove Coffee Stains from Carpet", "clean",
     [("1 tablespoon", "dish soap"), ("1 tablespoon", "white vinegar"), ("2 cups", "warm water"), ("1", "clean cloth")],
     ["coffee spots on the rug", "spilled coffee on carpets"]),
    ("Remove Red Wine Stains", "clean",
     [("1 cup", "club soda"), ("1 tablespoon", "hydrogen peroxide"), ("1 tablespoon", "dish soap"), ("1", "clean cloth")],
     ["spilled wine on a white shirt", "wine spill cleanup"]),
    ("Remove Grease Stains from Clothes", "clean",
     [("1 tablespoon", "dish soap"), ("1/4 cup", "baking soda"), ("1", "old toothbrush")],
     ["oil spots on a shirt", "greasy laundry stains"]),
    ("Season a Cast Iron Skillet", "maintain",
     [("1 tablespoon", "vegetable oil"), ("1", "paper towel"), ("1", "oven mitt")],
     ["restore a rusty iron pan", "seasoning skillets"]),
    ("Sharpen a Kitchen Knife", "maintain",
     [("1", "whetstone"), ("1 cup", "water"), ("1", "kitchen towel")],
     ["dull chef knife", "sharpening knives"]),
    ("Build a Raised Garden Bed", "build",
     [("4", "cedar boards"), ("16", "deck screws"), ("1", "drill"), ("10 bags", "garden soil")],
     ["cedar planter box for vegetables", "building raised beds"]),
    ("Grow Basil Indoors", "garden",
     [("1 packet", "basil seeds"), ("1", "pot with drainage"), ("1 bag", "potting soil"), ("1", "grow light")],
     ["basil plant on a windowsill", "growing basil"]),
    ("Grow Tomatoes in Containers", "garden",
     [("2", "tomato seedlings"), ("2", "large pots"), ("1 bag", "potting mix"), ("4", "tomato cages")],
     ["tomato plants on a balcony", "growing tomato"]),
    ("Plant a Lemon Tree", "garden",
     [("1", "lemon tree sapling"), ("1 bag", "citrus soil"), ("1", "large planter"), ("1", "shovel")],
     ["citrus tree in a pot", "planting lemon trees"]),
    ("Build a Backyard Fire Pit", "build",
     [("40", "retaining wall blocks"), ("1 bag", "gravel"), ("1", "shovel"), ("1", "level")],
     ["stone firepit", "building fire pits"]),
    ("Make a Bird Feeder", "craft",
     [("1", "pine cone"), ("1/2 cup", "peanut butter"), ("1 cup", "birdseed"), ("1 piece", "string")],
     ["feeding backyard birds", "bird feeders for kids"]),
    ("Make Soy Candles", "craft",
     [("1 pound", "soy wax flakes"), ("4", "candle wicks"), ("4", "glass jars"), ("1 ounce", "fragrance oil")],
     ["pouring candles at home", "candle making"]),
    ("Make an All Purpose Vinegar Cleaner", "craft",
     [("1 cup", "white vinegar"), ("1 cup", "water"), ("1", "spray bottle"), ("10 drops", "lemon essential oil")],
     ["natural spray cleaner", "vinegar cleaners"]),
    ("Clean an Oven", "clean",
     [("1/2 cup", "baking soda"), ("3 tablespoons", "water"), ("1", "spray bottle"), ("1", "plastic scraper")],
     ["burnt grime inside the oven", "cleaning ovens"]),
    ("Clean a Blender", "clean",
     [("1 drop", "dish soap"), ("1 cup", "warm water"), ("1", "sponge")],
     ["wash a smoothie blender", "blenders cleaning"]),
    ("Unclog a Kitchen Sink", "repair",
     [("1", "sink plunger"), ("1", "bucket"), ("1", "pipe wrench"), ("1", "drain snake")],
     ["standing water in the kitchen sink", "kitchen sinks clogged"]),
    ("Recaulk a Bathtub", "repair",
     [("1 tube", "silicone caulk"), ("1", "caulk gun"), ("1", "utility knife"), ("1 bottle", "rubbing alcohol")],
     ["moldy tub caulk", "caulking tubs"]),
    ("Install a Floating Shelf", "build",
     [("1", "floating shelf kit"), ("1", "stud finder"), ("1", "drill"), ("1", "level")],
     ["mount a wall shelf", "installing shelves"]),
    ("Fix a Squeaky Door Hinge", "repair",
     [("1 can", "silicone spray"), ("1", "hammer"), ("1", "nail"), ("1", "rag")],
     ["noisy creaking door", "squeaking doors"]),
    ("Clean Windows Without Streaks", "clean",
     [("1", "squeegee"), ("1 bucket", "warm water"), ("1 teaspoon", "dish soap"), ("2", "microfiber cloths")],
     ["streak free windows with a squeegee", "washing windows"]),
    ("Remove Rust from Tools", "clean",
     [("2 cups", "white vinegar"), ("1", "steel wool"), ("1 tablespoon", "salt"), ("1", "rag")],
     ["rusty tools cleanup", "removing rust"]),
    ("Paint Kitchen Cabinets", "paint",
     [("1 gallon", "cabinet paint"), ("1 quart", "primer"), ("1", "foam roller"), ("1 sheet", "sandpaper")],
     ["refresh cupboard doors", "painting cabinets"]),
    ("Stain a Wood Deck", "paint",
     [("2 gallons", "deck stain"), ("1", "stain brush"), ("1 jug", "deck cleaner"), ("1", "pressure washer")],
     ["protect deck boards", "staining decks"]),
    ("Build a Simple Bookshelf", "build",
     [("3", "pine boards"), ("1 box", "wood screws"), ("1", "drill"), ("1 can", "wood finish")],
     ["diy book rack", "building bookshelves"]),
    ("Fix a Running Toilet", "repair",
     [("1", "toilet flapper"), ("1", "adjustable wrench"), ("1", "sponge")],
     ["toilet keeps running", "fixing toilets"]),
    ("Clean Tile Grout", "clean",
     [("1/2 cup", "baking soda"), ("1/4 cup", "hydrogen peroxide"), ("1", "grout brush")],
     ["dirty lines between tiles", "grout cleaning"]),
    ("Make a Reusable Ice Pack", "craft",
     [("2 cups", "water"), ("1 cup", "rubbing alcohol"), ("2", "freezer bags")],
     ["cold compress for an injury", "homemade ice packs"]),
    ("Make a Garlic Spray for Plants", "garden",
     [("1 head", "garlic"), ("4 cups", "water"), ("1 teaspoon", "dish soap"), ("1", "spray bottle")],
     ["natural pest repellent for the garden", "bug spray for aphids"]),
    ("Repot a Houseplant", "garden",
     [("1", "larger pot"), ("1 bag", "potting soil"), ("1", "trowel")],
     ["plant outgrew its pot", "repotting plants"]),
    ("Start a Compost Bin", "garden",
     [("1", "compost bin"), ("1 bag", "dry leaves"), ("1", "pitchfork")],
     ["recycle kitchen scraps", "composting at home"]),
    ("Organize a Pantry", "build",
     [("6", "clear bins"), ("1", "label maker"), ("1", "shelf riser")],
     ["tidy the pantry shelves", "pantry organization"]),
    ("Clean a Microwave with Lemon", "clean",
     [("1", "lemon"), ("1 cup", "water"), ("1", "microwave safe bowl"), ("1", "sponge")],
     ["steam clean the microwave", "microwaves cleaning"]),
    ("Descale an Electric Kettle", "clean",
     [("2 cups", "white vinegar"), ("2 cups", "water")],
     ["limescale in the kettle", "descaling kettles"]),
    ("Deep Clean a Refrigerator", "clean",
     [("1/4 cup", "baking soda"), ("1 quart", "warm water"), ("1", "sponge"), ("1", "cooler")],
     ["smelly fridge", "cleaning fridges"]),
    ("Replace a Showerhead", "repair",
     [("1", "new showerhead"), ("1", "adjustable wrench"), ("1 roll", "plumber's tape")],
     ["swap the shower head", "replacing showerheads"]),
    ("Build a Birdhouse", "build",
     [("1", "cedar fence picket"), ("1 box", "galvanized nails"), ("1", "hand saw"), ("1", "drill")],
     ["cedar birdhouse for the yard", "building birdhouses"]),
    ("Clean Stainless Steel Appliances", "clean",
     [("1 spray bottle", "white vinegar"), ("1 teaspoon", "olive oil"), ("2", "microfiber cloths")],
     ["fingerprints on the fridge door", "polishing stainless steel"]),
    ("Remove Candle Wax from Fabric", "clean",
     [("1", "butter knife"), ("2", "paper bags"), ("1", "iron")],
     ["wax dripped on the tablecloth", "removing wax"]),
    ("Weatherstrip a Door", "repair",
     [("1 roll", "foam weatherstripping"), ("1", "utility knife"), ("1", "tape measure")],
     ["drafty front door", "weatherstripping doors"]),
    ("Make a Terrarium", "craft",
     [("1", "glass container"), ("1 cup", "pebbles"), ("1 cup", "activated charcoal"), ("2", "small succulents")],
     ["mini garden in a glass container", "terrariums"]),
    ("Wash Bed Pillows", "clean",
     [("2 tablespoons", "laundry detergent"), ("2", "tennis balls")],
     ["washing pillows", "yellowed pillows"]),
]

# Short queries whose words occur in both domains: (query, title of the intended record)
AMBIGUOUS = [
    ("lemon tree", "Plant a Lemon Tree"), ("lemon microwave", "Clean a Microwave with Lemon"),
    ("lemon squares", "Lemon Bars"), ("lemon chicken", "Lemon Garlic Roast Chicken"),
    ("coffee on carpet", "Remove Coffee Stains from Carpet"), ("coffee maker vinegar", "Clean a Coffee Maker with Vinegar"),
    ("cold coffee", "Iced Coffee"), ("coffee cake with cinnamon", "Cinnamon Coffee Cake"),
    ("wine stain", "Remove Red Wine Stains"), ("beef in red wine", "Red Wine Beef Stew"),
    ("garlic spray", "Make a Garlic Spray for Plants"), ("garlic butter loaf", "Garlic Bread"),
    ("basil indoors", "Grow Basil Indoors"), ("basil sauce", "Basil Pesto"),
    ("tomatoes in pots", "Grow Tomatoes in Containers"), ("tomato cream soup", "Creamy Tomato Soup"),
    ("cast iron pan oil", "Season a Cast Iron Skillet"), ("skillet corn bread", "Skillet Cornbread"),
    ("ice pack", "Make a Reusable Ice Pack"), ("vanilla ice cream", "Vanilla Ice Cream"),
    ("bird feeder with peanut butter", "Make a Bird Feeder"), ("bird nest treats", "Bird's Nest Cookies"),
    ("clogged kitchen sink", "Unclog a Kitchen Sink"), ("kitchen sink cookie", "Kitchen Sink Cookies"),
    ("oven baking soda paste", "Clean an Oven"), ("oven potatoes", "Oven Roasted Potatoes"),
    ("fire pit blocks", "Build a Backyard Fire Pit"), ("fire roasted tomato salsa", "Fire Roasted Salsa"),
    ("blender soap", "Clean a Blender"), ("strawberry banana blender drink", "Strawberry Smoothie"),
    ("vinegar spray bottle", "Make an All Purpose Vinegar Cleaner"), ("vinegar cabbage", "Vinegar Coleslaw"),
    ("olive oil on steel", "Clean Stainless Steel Appliances"), ("olive oil potatoes", "Oven Roasted Potatoes"),
    ("grease on a shirt", "Remove Grease Stains from Clothes"), ("dish soap grout", "Clean Tile Grout"),
    ("candle wax", "Remove Candle Wax from Fabric"), ("soy wax", "Make Soy Candles"),
    ("soy sauce noodles", "Egg Fried Noodles"), ("salt rust", "Remove Rust from Tools"),
    ("sponge fridge", "Deep Clean a Refrigerator"), ("baking soda drain", "Unclog a Bathroom Drain"),
    ("water kettle vinegar", "Descale an Electric Kettle"), ("lemon water microwave bowl", "Clean a Microwave with Lemon"),
]
