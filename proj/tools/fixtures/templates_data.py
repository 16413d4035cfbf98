"""Responder wording."""

RESPONDERS = {
    "greeting_morning": ([], ["Good morning!", "Morning! Nice to hear from you."]),
    "greeting_afternoon": ([], ["Good afternoon!", "Hi, good afternoon."]),
    "greeting_evening": ([], ["Good evening!", "Hi there, good evening."]),
    "welcome_prompt": ([], ["I can help you cook a recipe or finish a home project. What would you like to do?",
                            "Tell me a dish or a home task and I will find instructions."]),
    "ask_task": ([], ["What would you like to make or fix today?",
                      "Tell me a recipe or a home project you have in mind."]),
    "clarify_question": (["task"], ["Any dietary needs for {task}? For example vegetarian or gluten free.",
                                     "Before I search for {task}, do you have a diet or cuisine in mind?"]),
    "profanity_redirect": ([], ["Let's keep it friendly. What recipe or project can I help with?"]),
    "dangerous_task": (["task"], ["Sorry, I can't help with {task}. Stay safe. Goodbye."]),
    "professional_task": (["task"], ["For {task} you should call a licensed professional. "
                                     "Is there another project I can help with?"]),
    "no_results": ([], ["I couldn't find a match for that. Try describing it another way.",
                        "Nothing came up for that one. Could you try different words?"]),
    "catalog_intro": ([], ["Here is what I found.", "I found a few options."]),
    "catalog_item": (["ordinal", "title", "meta"], ["The {ordinal} is {title}{meta}.",
                                                     "Your {ordinal} option is {title}{meta}."]),
    "catalog_choose": ([], ["Which one would you like?", "Pick one by saying its number, like the first one."]),
    "catalog_more": ([], ["Say more to hear other options.", "You can also say more for other choices."]),
    "catalog_first_page": ([], ["These are already the first options."]),
    "catalog_last_page": ([], ["There are no more options after these."]),
    "favorites_intro": ([], ["Here are some favorite recipe and task picks from our community.",
                             "Our favorite recipe and task ideas right now:"]),
    "favorite_item": (["ordinal", "title", "blurb"], ["The {ordinal} is {title}. {blurb}",
                                                       "Your {ordinal} pick is {title}. {blurb}"]),
    "comparison_intro": ([], ["Here is how they compare.", "Side by side:"]),
    "comparison_item": (["ordinal", "title", "facts"], ["The {ordinal}, {title}, {facts}.",
                                                         "Your {ordinal} option, {title}, {facts}."]),
    "choice_invalid": (["count"], ["Please choose a number between one and {count}."]),
    "overview": (["title", "details"], ["{title}. {details}", "Great choice: {title}. {details}"]),
    "overview_ingredients": (["count", "list"], ["You'll need {count} things: {list}.",
                                                 "This needs {count} items: {list}."]),
    "overview_prompt": ([], ["Say start when you're ready.", "Ready to begin? Say start."]),
    "overview_details": (["list"], ["Here is the full list: {list}."]),
    "step": (["index", "total", "instruction"], ["Step {index} of {total}. {instruction}",
                                                 "Step {index} of {total}. Here we go. {instruction}"]),
    "step_detail": (["index", "detail"], ["More on step {index}: {detail}"]),
    "step_tips": (["index", "tips"], ["A tip for step {index}: {tips}"]),
    "no_more_detail": ([], ["That's everything for this step."]),
    "hint_next": ([], ["Say next when you're ready.", "Say next to continue."]),
    "hint_detail": ([], ["Ask for more details if you need them."]),
    "hint_goto": (["step"], ["You can jump ahead by saying go to step {step}."]),
    "hint_last": ([], ["This is the last step. Say I'm done when you finish."]),
    "first_step": ([], ["You're already on the first step."]),
    "last_step": ([], ["That was the last step. Say I'm done when you finish."]),
    "cannot_go_to_step": (["total"], ["This task only has {total} steps."]),
    "task_complete": (["title"], ["Well done, you finished {title}!", "Nice work completing {title}!"]),
    "completed_prompt": ([], ["Would you like to try something else? Tell me a new recipe or project."]),
    "goodbye": ([], ["Goodbye! Come back anytime.", "Bye for now. Happy making!"]),
    "repeat": (["speech"], ["Sure. {speech}", "Again: {speech}"]),
    "qa_answer": (["answer"], ["{answer}", "Here's what the instructions say: {answer}"]),
    "qa_decline": ([], ["I'm not sure about that one.",
                        "I couldn't find that in the instructions."]),
    "qa_factual": ([], ["I can't look up general facts right now, but I can help with this task."]),
    "ingredient_answer": (["quantity", "ingredient"], ["You need {quantity} of {ingredient}.",
                                                        "The recipe calls for {quantity} of {ingredient}."]),
    "ingredient_present": (["ingredient"], ["Yes, this uses {ingredient}."]),
    "substitute_answer": (["ingredient", "suggestion"], ["Instead of {ingredient} you can use {suggestion}.",
                                                          "No {ingredient}? Try {suggestion}."]),
    "substitute_none": (["ingredient"], ["I don't know a good substitute for {ingredient}."]),
    "error_apology": ([], ["Something went wrong on my side. Please say that again."]),
    "list_add": (["item"], ["Added {item} to your shopping list."]),
    "list_remove": (["item"], ["Removed {item} from your shopping list."]),
    "list_missing_item": ([], ["What should I add to the list?"]),
    "list_not_found": (["item"], ["{item} isn't on your shopping list."]),
    "timer_set": (["duration"], ["Timer set for {duration}.", "Okay, {duration} starting now."]),
    "timer_pause": (["duration"], ["Timer paused with {duration} left."]),
    "timer_resume": (["duration"], ["Timer resumed, {duration} to go."]),
    "timer_cancel": ([], ["Timer cancelled."]),
    "timer_missing_duration": ([], ["How long should the timer be?"]),
    "timer_none": ([], ["There's no timer running."]),
    "timer_fired": (["duration"], ["Your {duration} timer is done."]),
    "help_welcome": ([], ["You can say a dish like banana bread or a project like fix a leaky faucet.",
                          "Try asking for a recipe, a home project, or say what do you recommend."]),
    "help_clarification": ([], ["You can say vegetarian, gluten free, a cuisine like italian, or no preference."]),
    "help_catalog": ([], ["You can say the first one, more, or ask me to compare them.",
                          "Pick an option by number, say more to see others, or search for something new."]),
    "help_comparison": ([], ["You can pick one by number or say go back."]),
    "help_overview": ([], ["You can say start to begin, ask for details, or go back to the list.",
                           "Say start when you're ready, or go back to choose another one."]),
    "help_step": ([], ["You can say next, go back, repeat, or ask me a question about this step.",
                       "If you're stuck, you can say more details, repeat, or next."]),
    "help_completed": ([], ["You can start a new recipe or project, or say stop to finish."]),
}
